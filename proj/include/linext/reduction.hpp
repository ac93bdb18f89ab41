#pragma once

// Equivalence of quadruples through a unit-valued map h: X -> R^x, and the
// reduction of an arbitrary valid quadruple to a pair-induced one.

#include <optional>
#include <span>
#include <vector>

#include "linext/alexpair.hpp"
#include "linext/quadruple.hpp"

namespace linext {

/// Exhaustively checks
///   h(x◁y) f1(x,y) = g1(x,y) h(x),   h(x◁y) f2(x,y) = g2(x,y) h(y),
///   h(ab)  f3(a,b) = g3(a,b) h(a),   h(ab)  f4(a,b) = g4(a,b) h(b).
/// Throws PreconditionError if some h(x) is not a unit or the quadruples
/// live over different structures.
bool check_equivalent(const Quadruple& q1, const Quadruple& q2,
                      std::span<const Elem> h);

struct EquivalenceSearch {
  enum class Outcome { found, none, undecided };
  Outcome outcome = Outcome::none;
  std::vector<Elem> h;  // set when found
  std::uint64_t nodes = 0;
};

/// Backtracking search for a witness h. Values of h are propagated along
/// h(x◁y) = g1(x,y) h(x) f1(x,y)^-1 and the analogous f3 relation before
/// branching. Exceeding budget.max_search_nodes yields `undecided`.
EquivalenceSearch find_equivalence(const Quadruple& q1, const Quadruple& q2,
                                   const Budget& budget = {});

/// f3 = 1, f4(a,b) = f1(a,a^-1). Requires a verified pair; returns a
/// verified quadruple.
Quadruple pair_to_quadruple(const AlexanderPair& p);

struct Reduction {
  Quadruple reduced;
  AlexanderPair pair;
  std::vector<Elem> h;
};

/// For a verified quadruple f:
///   g1(x,y) = f1(e_x, y)
///   g2(x,y) = f3(x◁y, x^-1◁y) f2(x,y) f3(e_y, y)
///   g3 = 1,  g4(a,b) = f1(e_a, a^-1)
///   h(x)    = f3(x, x^-1)
/// Both the reduced quadruple and the pair (g1, g2) are verified before
/// returning; a failure there throws std::logic_error.
Reduction reduce(const Quadruple& q);

/// (x,u) -> (x, h(x) u) between the linear extensions of q1 and q2 over m.
/// Requires check_equivalent(q1, q2, h).
std::vector<Elem> cohomologous_iso(const Quadruple& q1, const Quadruple& q2,
                                   std::span<const Elem> h,
                                   const FiniteModule& m);

/// Runs the whole reduction pipeline on a verified quadruple and audits every
/// step over the module m. Labels: "reduced-quadruple", "reduced-pair",
/// "pair-induced" (pair_to_quadruple(pair) has the reduced tables),
/// "equivalence", "iso-bijective", "iso-hom", "iso-projection".
ValidityReport audit_reduction(const Quadruple& q, const FiniteModule& m,
                               const Budget& budget = {});

}  // namespace linext
