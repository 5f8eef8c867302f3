#pragma once

// Rota-Baxter operators on finite Clifford semigroups: verification,
// exhaustive enumeration, elementary and opposite operators, equivalence,
// gluing along a strong semilattice, exact factorizations, and the two
// structured families of endomorphic operators.
//
// Additive notation: a + b is S.op(a, b), -a is S.inverse(a), a0 = S.idem(a).
// The defining identities of R:
//   RB1: R(a) + R(b) = R(a + R(a) + b - R(a))
//   RB2: a + R(a)0 = a

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotabrace/clifford.hpp"

namespace rotabrace {

struct RotaBaxterOperator {
  CarrierPtr carrier;
  ElementMap images;

  Element operator()(Element a) const { return images[a]; }
  bool operator==(const RotaBaxterOperator& o) const { return images == o.images; }
};

struct RbVerdict {
  bool ok = true;
  int identity = 0;  // 1 or 2 when !ok
  std::array<Element, 2> witness{-1, -1};

  std::string describe() const;
};

/// Checks RB2 (one pass) then RB1 (flat n^2 scan); first failure wins.
RbVerdict check_rota_baxter(const CliffordSemigroup& S, const ElementMap& images);
bool is_rota_baxter(const CliffordSemigroup& S, const ElementMap& images);

struct RbOptions {
  int max_order = 8;
};

/// All Rota-Baxter operators on S, sorted lexicographically by images.
/// Backtracking over a pruned candidate tree (idempotents first); every leaf
/// is re-verified with the full check.  Throws CarrierTooLarge beyond the cap.
std::vector<RotaBaxterOperator> enumerate_rota_baxter(const CarrierPtr& S,
                                                      const RbOptions& opts = {});

/// The two operators every Clifford semigroup carries:
/// first  E(a) = a0, second O(a) = -a.
std::pair<RotaBaxterOperator, RotaBaxterOperator> elementary_operators(const CarrierPtr& S);

/// R^op(a) = -a + R(-a); Rota-Baxter whenever R is.
RotaBaxterOperator opposite_operator(const RotaBaxterOperator& R);

/// First automorphism psi of the common carrier with psi(R1(a)) = R2(psi(a))
/// for all a, in lexicographic order; nullopt if the operators are not
/// equivalent.  Throws CarrierTooLarge beyond the cap.
std::optional<ElementMap> equivalent_operators(const RotaBaxterOperator& R1,
                                               const RotaBaxterOperator& R2,
                                               int max_order = 8);

// ---- gluing along a strong semilattice -------------------------------------

/// Glues components[v] (a map on the local indices of group v) blockwise into
/// one map on the built carrier.  No compatibility checking.
ElementMap glue_componentwise(const SemilatticeCarrier& sc,
                              const std::vector<ElementMap>& components);

/// Glues per-vertex Rota-Baxter operators into one on the whole semilattice.
/// Requires the compatibility condition R_b(phi_{a,b}(x)) = phi_{a,b}(R_a(x))
/// for every comparable pair a >= b; throws VerificationError with code
/// "ConditionViolated" and witness {a, b, x} at the first violation.  The
/// glued operator is re-verified before being returned.
RotaBaxterOperator strong_operator_from_components(const SemilatticeCarrier& sc,
                                                   const std::vector<ElementMap>& components);

// ---- exact factorizations ---------------------------------------------------

/// S = U + V with every element factoring uniquely; U and V are subsemigroups.
struct ExactFactorization {
  std::vector<Element> u_members;
  std::vector<Element> v_members;
  std::vector<std::array<Element, 2>> parts;  // parts[a] = {u, v}, a = u + v

  bool operator==(const ExactFactorization&) const = default;
};

/// All exact factorizations of a Clifford monoid, sorted by (u_members,
/// v_members).  Throws PreconditionError("NotAMonoid") when S has no
/// identity and CarrierTooLarge beyond the cap.
std::vector<ExactFactorization> find_exact_factorizations(const CarrierPtr& S,
                                                          int max_order = 12);

/// The operator pair induced by an exact factorization:
/// R(a) = -v_a and T(a) = u_a0 - v_a.  Both are verified before return.
std::pair<RotaBaxterOperator, RotaBaxterOperator> rb_from_exact_factorization(
    const CarrierPtr& S, const ExactFactorization& f);

// ---- structured endomorphic families ---------------------------------------

/// All Rota-Baxter operators on the built semilattice that are endomorphisms
/// with commutative image.  Generated from pairs (h, {f_a}) where h is a
/// semilattice endomorphism of the vertex order with a <= h(a) and each
/// f_a : G_a -> G_{h(a)} is a homomorphism with commutative image compatible
/// with the structure maps; every candidate is re-verified.  Sorted by images.
std::vector<RotaBaxterOperator> commutative_rb_endomorphisms(const SemilatticeCarrier& sc);

/// All idempotent Rota-Baxter endomorphisms of a group, generated from pairs
/// (N, T): N normal with abelian quotient, T a subgroup transversal of N;
/// R(g) is the unique member of T in the coset N + g.  Every candidate is
/// re-verified.  Throws PreconditionError("NotAGroup") on non-group carriers.
/// Sorted by images.
std::vector<RotaBaxterOperator> idempotent_rb_endomorphisms(const CarrierPtr& S);

}  // namespace rotabrace
