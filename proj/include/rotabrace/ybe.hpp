#pragma once

// Set-theoretic solutions of the Yang-Baxter equation derived from dual weak
// braces: r(a, b) = (lambda_a(b), rho_b(a)).  Braid checking, regularity
// diagnostics against the opposite-brace solution, non-degeneracy, and
// equivalence of solutions.

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "rotabrace/weak_brace.hpp"

namespace rotabrace {

/// A map r : S x S -> S x S stored componentwise, row-major in the first
/// argument: r(a, b) = (left[a*n+b], right[a*n+b]).  Verdicts computed along
/// the way are cached; equality ignores them.
struct SolutionMap {
  int order = 0;
  std::vector<Element> left;
  std::vector<Element> right;

  std::optional<bool> braid_ok;
  std::optional<bool> left_nondeg;
  std::optional<bool> right_nondeg;
  std::shared_ptr<const SolutionMap> completely_regular_with;

  Element l(Element a, Element b) const { return left[static_cast<std::size_t>(a) * order + b]; }
  Element r(Element a, Element b) const { return right[static_cast<std::size_t>(a) * order + b]; }

  bool operator==(const SolutionMap& o) const {
    return order == o.order && left == o.left && right == o.right;
  }
};

struct BraidVerdict {
  bool ok = true;
  std::array<Element, 3> witness{-1, -1, -1};
};

/// r12 r23 r12 = r23 r12 r23 on triples; flat n^3 scan, first failure wins.
BraidVerdict check_braid(const SolutionMap& r);

/// Bijectivity of every lambda_x (rows) and every rho_x (columns).
std::pair<bool, bool> nondegeneracy(const SolutionMap& r);

/// r(a, b) = (lambda_a(b), rho_b(a)); the braid relation is re-checked (a
/// VerificationError("BraidRelationFailed") is thrown if it ever failed) and
/// the braid/non-degeneracy caches are filled.
SolutionMap solution_from_brace(const DualWeakBrace& B);

/// Same solution computed directly from the operator without building the
/// brace: lambda_a(b) = a0 + R(a) + b - R(a) and
/// rho_b(a) = -R(u) - u + a + u + R(u) with u = lambda_a(b).
SolutionMap solution_from_operator(const RotaBaxterOperator& R);

struct RegularityReport {
  // r r^op r = r, r^op r r^op = r^op, r r^op = r^op r, where r^op is the
  // solution of the opposite brace.
  bool r_rop_r = false;
  bool rop_r_rop = false;
  bool composites_commute = false;
  // Per-component regularity: x y x = x, y x y = y, x y = y x for the pairs
  // x = lambda_a, y = lambda_{a^} and x = rho_b, y = rho_{b^}.
  bool lambda_regular = false;
  bool lambda_inv_regular = false;
  bool lambda_composites_commute = false;
  bool rho_regular = false;
  bool rho_inv_regular = false;
  bool rho_composites_commute = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  // Skew case: one idempotent forces r bijective with r^-1 = r^op.
  bool skew = false;
  bool r_bijective = false;
  bool inverse_is_opposite = false;

  SolutionMap rop;
};

/// Full diagnostic for r = solution_from_brace(B) (checked; throws
/// PreconditionError("SolutionMismatch") otherwise).  Fills r's caches,
/// including the completely_regular_with partner when the three composite
/// identities hold.
RegularityReport regularity_report(const DualWeakBrace& B, SolutionMap& r);

/// First bijection f (lexicographically) with (f x f) . r1 = r2 . (f x f),
/// or nullopt.  Throws CarrierTooLarge beyond the cap.
std::optional<ElementMap> solutions_equivalent(const SolutionMap& r1, const SolutionMap& r2,
                                               int max_order = 8);

bool is_equivalence_witness(const SolutionMap& r1, const SolutionMap& r2,
                            const ElementMap& f);

}  // namespace rotabrace
