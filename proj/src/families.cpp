#include "cactus/families.hpp"

#include <array>
#include <string>
#include <vector>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

using Count = std::int64_t;

Rational q(Count num, Count den = 1) { return Rational(num, den); }
Rational z(std::size_t x) { return Rational(static_cast<Count>(x)); }

std::string params(std::size_t n, std::size_t t) {
  return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

// Grows a graph around hub vertex 0.
class HubBuilder {
 public:
  HubBuilder() : next_(1) {}

  HubBuilder& cycles(std::size_t count, std::size_t length) {
    for (std::size_t c = 0; c < count; ++c) {
      Vertex previous = 0;
      for (std::size_t i = 1; i < length; ++i) {
        const Vertex v = next_++;
        edges_.emplace_back(previous, v);
        previous = v;
      }
      edges_.emplace_back(0, previous);
    }
    return *this;
  }

  HubBuilder& pendants(std::size_t count) { return pendants_at(0, count); }

  HubBuilder& pendants_at(Vertex anchor, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) edges_.emplace_back(anchor, next_++);
    return *this;
  }

  Vertex last() const { return next_ - 1; }

  Graph build() const { return Graph(next_, edges_); }

 private:
  std::size_t next_;
  std::vector<Edge> edges_;
};

void require(bool ok, std::string_view family, std::size_t n, std::size_t t) {
  if (!ok) throw InfeasibleParameters(std::string(family) + " does not exist for " + params(n, t));
}

}  // namespace

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::G0: return "g0";
    case FamilyId::G3: return "g3";
    case FamilyId::G4: return "g4";
    case FamilyId::G5: return "g5";
    case FamilyId::G8: return "g8";
    case FamilyId::G10: return "g10";
    case FamilyId::CyclePendant: return "cycle-pendant";
  }
  return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId id : {FamilyId::G0, FamilyId::G3, FamilyId::G4, FamilyId::G5, FamilyId::G8, FamilyId::G10,
                      FamilyId::CyclePendant}) {
    if (family_name(id) == name) return id;
  }
  return std::nullopt;
}

bool is_inferred(FamilyId id) { return id == FamilyId::G8 || id == FamilyId::G10; }

bool family_feasible(FamilyId id, std::size_t n, std::size_t t) {
  switch (id) {
    case FamilyId::G0: return n >= 1 && n >= 2 * t + 1;
    case FamilyId::G3: return n >= 2 * t + 3;
    case FamilyId::G4: return t >= 1 && n >= 2 * t + 2;
    case FamilyId::G5: return t >= 1 && n >= 2 * t + 2;
    case FamilyId::G8: return t >= 2 && n >= 2 * t + 3;
    case FamilyId::G10: return t >= 1 && n >= 2 * t + 3;
    case FamilyId::CyclePendant: return n >= 4;  // n plays the role of h
  }
  return false;
}

Graph build_g0(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G0, n, t), "G0", n, t);
  return HubBuilder().cycles(t, 3).pendants(n - 2 * t - 1).build();
}

Graph build_g3(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G3, n, t), "G3", n, t);
  HubBuilder b;
  b.cycles(t, 3).pendants(n - 2 * t - 3).pendants(1);
  return b.pendants_at(b.last(), 1).build();
}

Graph build_g4(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G4, n, t), "G4", n, t);
  return HubBuilder().cycles(t, 3).pendants(n - 2 * t - 2).pendants_at(1, 1).build();
}

Graph build_g5(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G5, n, t), "G5", n, t);
  return HubBuilder().cycles(t - 1, 3).cycles(1, 4).pendants(n - 2 * t - 2).build();
}

Graph build_g8(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G8, n, t), "G8", n, t);
  return HubBuilder().cycles(t - 2, 3).cycles(2, 4).pendants(n - 2 * t - 3).build();
}

Graph build_g10(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G10, n, t), "G10", n, t);
  return HubBuilder().cycles(t - 1, 3).cycles(1, 5).pendants(n - 2 * t - 3).build();
}

Graph build_cycle_pendant(std::size_t h) {
  if (h < 4) throw InfeasibleParameters("cycle-pendant fragment needs h >= 4, got " + std::to_string(h));
  return HubBuilder().cycles(1, h - 1).pendants(1).build();
}

Graph build_family(FamilyId id, std::size_t n, std::size_t t, std::size_t h) {
  switch (id) {
    case FamilyId::G0: return build_g0(n, t);
    case FamilyId::G3: return build_g3(n, t);
    case FamilyId::G4: return build_g4(n, t);
    case FamilyId::G5: return build_g5(n, t);
    case FamilyId::G8: return build_g8(n, t);
    case FamilyId::G10: return build_g10(n, t);
    case FamilyId::CyclePendant: return build_cycle_pendant(h);
  }
  throw InfeasibleParameters("unknown family");
}

CycleForms closed_forms_cycle(std::size_t k) {
  if (k < 3) throw InfeasibleParameters("cycle forms need k >= 3, got " + std::to_string(k));
  const Rational kk = z(k);
  const Rational cube = kk * kk * kk - kk;
  const Rational square = kk * kk - q(1);
  return CycleForms{cube / q(12), cube / q(3), square / q(6), square / q(3)};
}

CyclePendantForms closed_forms_cycle_pendant(std::size_t h) {
  if (h < 4) throw InfeasibleParameters("cycle-pendant forms need h >= 4, got " + std::to_string(h));
  const Rational hh = z(h);
  return CyclePendantForms{(hh * hh * hh - hh * hh + q(7) * hh - q(6)) / q(3),
                           (hh * hh - q(2) * hh + q(6)) / q(6), (hh * hh - q(2) * hh + q(3)) / q(3)};
}

Rational g0_closed_form(std::size_t n, std::size_t t) {
  require(family_feasible(FamilyId::G0, n, t), "G0", n, t);
  const Rational nn = z(n);
  const Rational tt = z(t);
  return -q(4, 3) * tt * tt + (q(4, 3) * nn - q(14, 3)) * tt + q(3) * nn * nn - q(7) * nn + q(4);
}

Rational corollary_closed_forms(FamilyId family, std::size_t n, std::size_t t) {
  const Rational nn = z(n);
  const Rational tt = z(t);
  switch (family) {
    case FamilyId::G5:
      require(family_feasible(FamilyId::G5, n, t), "G5", n, t);
      return -q(4, 3) * tt * tt + (q(4, 3) * nn - q(13, 3)) * tt + q(3) * nn * nn - q(16, 3) * nn - q(19, 3);
    case FamilyId::G4:
      require(family_feasible(FamilyId::G4, n, t), "G4", n, t);
      return -q(4, 3) * tt * tt + (q(4, 3) * nn - q(10, 3)) * tt + q(3) * nn * nn - q(13, 3) * nn - q(8);
    default:
      throw InfeasibleParameters("no corollary polynomial for family " + std::string(family_name(family)));
  }
}

namespace difference {

Rational g3_minus_g0(std::size_t n, std::size_t t) { return q(4) * z(n) + q(2) * z(t) - q(12); }

Rational g4_minus_g0(std::size_t n, std::size_t t) { return q(8, 3) * z(n) + q(4, 3) * z(t) - q(12); }

Rational g5_minus_g0(std::size_t n, std::size_t t) { return q(5, 3) * z(n) + q(1, 3) * z(t) - q(31, 3); }

Rational g8_minus_g0(std::size_t n, std::size_t t) { return q(10, 3) * z(n) + q(2, 3) * z(t) - q(62, 3); }

Rational g10_minus_g5(std::size_t n, std::size_t t) { return q(3) * z(n) + z(t) - q(19); }

Rational g6_minus_g4(std::size_t n, std::size_t t) { return q(2) * z(n) + q(1, 2) * z(t) - q(89, 6); }

Rational g7_minus_g6(std::size_t n, std::size_t t) { return z(n) + q(1, 2) * z(t) - q(11, 2); }

Rational g9_minus_g8(std::size_t n, std::size_t t) { return z(n) + z(t) - q(5, 3); }

Rational cycle_minus_cycle_pendant(std::size_t h) {
  const Rational hh = z(h);
  return (hh * hh - q(8) * hh + q(6)) / q(3);
}

Rational cycle_shortening(std::size_t n, std::size_t t, std::size_t h) {
  // Kf_u and D_u differences between C_h and the cycle-pendant fragment are
  // (2h - 7)/6 and (2h - 4)/3; the rest of the graph has n + t - 1 - h edges
  // and n - h vertices besides u.
  const Rational hh = z(h);
  const Rational rest_edges = z(n) + z(t) - q(1) - hh;
  const Rational rest_vertices = z(n) - hh;
  return cycle_minus_cycle_pendant(h) + q(2) * rest_edges * (q(2) * hh - q(7)) / q(6) +
         rest_vertices * (q(2) * hh - q(4)) / q(3);
}

}  // namespace difference

namespace erroneous {

Rational cycle_minus_cycle_pendant(std::size_t h) {
  const Rational hh = z(h);
  return (hh * hh - q(8) * hh + q(3)) / q(3);
}

Rational g0_form(std::size_t n, std::size_t t) {
  const Rational nn = z(n);
  const Rational tt = z(t);
  return -q(4, 3) * tt * tt + (q(8, 3) * nn - q(6)) * tt + q(3) * nn * nn - q(7) * nn + q(4);
}

}  // namespace erroneous

}  // namespace cactus
