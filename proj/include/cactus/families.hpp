#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cactus/graph.hpp"
#include "cactus/rational.hpp"

namespace cactus {

// Extremal cactus families. Every constructor puts the hub at vertex 0 and
// numbers triangles first, then larger cycles, then hub pendants, then any
// remaining vertices. Infeasible (n, t) raise InfeasibleParameters.
enum class FamilyId { G0, G3, G4, G5, G8, G10, CyclePendant };

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// G8 and G10 are reconstructed from difference formulas only; their shapes
/// are hypotheses rather than published drawings.
bool is_inferred(FamilyId id);

/// t triangles and n - 2t - 1 pendant edges sharing the hub.
Graph build_g0(std::size_t n, std::size_t t);

/// G0 with two hub pendants replaced by one pendant path of length two.
Graph build_g3(std::size_t n, std::size_t t);

/// G0(n - 1, t) plus a pendant at a degree-2 triangle vertex.
Graph build_g4(std::size_t n, std::size_t t);

/// t - 1 triangles, one 4-cycle and n - 2t - 2 pendants at the hub.
Graph build_g5(std::size_t n, std::size_t t);

/// t - 2 triangles, two 4-cycles and n - 2t - 3 pendants at the hub (inferred).
Graph build_g8(std::size_t n, std::size_t t);

/// t - 1 triangles, one 5-cycle and n - 2t - 3 pendants at the hub (inferred).
Graph build_g10(std::size_t n, std::size_t t);

/// Cycle C_{h-1} on 0..h-2 with a pendant vertex h-1 hung at vertex 0.
Graph build_cycle_pendant(std::size_t h);

/// Dispatch by id; `h` is used only by CyclePendant.
Graph build_family(FamilyId id, std::size_t n, std::size_t t, std::size_t h = 0);

/// True when build_family(id, n, t) would succeed.
bool family_feasible(FamilyId id, std::size_t n, std::size_t t);

struct CycleForms {
  Rational kirchhoff;          // (k^3 - k) / 12
  Rational degree_resistance;  // (k^3 - k) / 3
  Rational kf_v;               // (k^2 - 1) / 6
  Rational d_v;                // (k^2 - 1) / 3
};

CycleForms closed_forms_cycle(std::size_t k);

/// Forms for build_cycle_pendant(h), rooted at the vertex carrying the pendant.
struct CyclePendantForms {
  Rational degree_resistance;  // (h^3 - h^2 + 7h - 6) / 3
  Rational kf_u;               // (h^2 - 2h + 6) / 6
  Rational d_u;                // (h^2 - 2h + 3) / 3
};

CyclePendantForms closed_forms_cycle_pendant(std::size_t h);

/// -4/3 t^2 + (4/3 n - 14/3) t + 3 n^2 - 7 n + 4.
Rational g0_closed_form(std::size_t n, std::size_t t);

/// Lower-bound polynomials attained by G5 (second minimum) and G4 (third
/// minimum). Only FamilyId::G5 and FamilyId::G4 are accepted.
Rational corollary_closed_forms(FamilyId family, std::size_t n, std::size_t t);

// Published differences against G0 and between competitors.
namespace difference {

Rational g3_minus_g0(std::size_t n, std::size_t t);   // 4n + 2t - 12
Rational g4_minus_g0(std::size_t n, std::size_t t);   // 8n/3 + 4t/3 - 12
Rational g5_minus_g0(std::size_t n, std::size_t t);   // 5n/3 + t/3 - 31/3
Rational g8_minus_g0(std::size_t n, std::size_t t);   // 10n/3 + 2t/3 - 62/3
Rational g10_minus_g5(std::size_t n, std::size_t t);  // 3n + t - 19
Rational g6_minus_g4(std::size_t n, std::size_t t);   // 2n + t/2 - 89/6
Rational g7_minus_g6(std::size_t n, std::size_t t);   // n + t/2 - 11/2
Rational g9_minus_g8(std::size_t n, std::size_t t);   // n + t - 5/3

/// D_R(G) - D_R(G*) for the cycle-shortening transform on an end cycle of
/// length h in a cactus with n vertices and t cycles.
Rational cycle_shortening(std::size_t n, std::size_t t, std::size_t h);

/// D_R(C_h) - D_R(cycle_pendant(h)) = (h^2 - 8h + 6) / 3.
Rational cycle_minus_cycle_pendant(std::size_t h);

}  // namespace difference

// Formulas as originally published before correction, kept so the harness can
// show where they disagree with exact computation.
namespace erroneous {

/// (h^2 - 8h + 3) / 3.
Rational cycle_minus_cycle_pendant(std::size_t h);

/// -4/3 t^2 + (8/3 n - 6) t + 3 n^2 - 7 n + 4, the sign that reproduces the
/// published value 50 at (5, 1).
Rational g0_form(std::size_t n, std::size_t t);

}  // namespace erroneous

}  // namespace cactus
