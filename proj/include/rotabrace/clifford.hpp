#pragma once

// Finite Clifford semigroups: verification, strong-semilattice decomposition
// and reconstruction, homomorphism enumeration, and normal subsets.
//
// Elements are dense indices 0..order-1; every structure map is an array.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rotabrace/errors.hpp"

namespace rotabrace {

using Element = int;
/// Total map between carriers: images[a] is the image of a.
using ElementMap = std::vector<Element>;

/// Square multiplication table, row-major: at(a, b) = a * b.
struct CayleyTable {
  int order = 0;
  std::vector<Element> cells;

  CayleyTable() = default;
  CayleyTable(int n, std::vector<Element> c) : order(n), cells(std::move(c)) {}

  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);
  std::vector<std::vector<Element>> rows() const;

  Element at(Element a, Element b) const {
    return cells[static_cast<std::size_t>(a) * order + b];
  }
  Element& at(Element a, Element b) {
    return cells[static_cast<std::size_t>(a) * order + b];
  }

  bool operator==(const CayleyTable&) const = default;
};

enum class CliffordDefect {
  EntryOutOfRange,
  NotAssociative,
  NoInverse,
  NonUniqueInverse,
  NotClifford,
  IdempotentNotCentral,
};

const char* to_string(CliffordDefect d);

/// Outcome of check_clifford.  The scan order is fixed, so the reported
/// defect and witness are deterministic (first failure wins).
struct CliffordVerdict {
  bool ok = true;
  CliffordDefect defect = CliffordDefect::NotAssociative;
  std::array<Element, 3> witness{-1, -1, -1};

  std::string describe() const;
};

CliffordVerdict check_clifford(const CayleyTable& table);

class CliffordSemigroup {
 public:
  int order() const { return table_.order; }
  Element op(Element a, Element b) const { return table_.at(a, b); }
  Element inverse(Element a) const { return inverse_[a]; }
  /// a0 = a * a^-1 (= a^-1 * a), the idempotent attached to a.
  Element idem(Element a) const { return idem_[a]; }
  bool is_idempotent(Element a) const { return table_.at(a, a) == a; }
  const std::vector<Element>& inverses() const { return inverse_; }
  const std::vector<Element>& idem_parts() const { return idem_; }
  /// Sorted list of idempotent elements.
  const std::vector<Element>& idempotents() const { return idempotents_; }
  bool is_group() const { return idempotents_.size() == 1; }
  /// The two-sided identity, when the semigroup is a monoid.
  std::optional<Element> identity() const { return identity_; }
  const CayleyTable& table() const { return table_; }

  friend CliffordSemigroup verify_clifford(CayleyTable table);

 private:
  explicit CliffordSemigroup(CayleyTable table);

  CayleyTable table_;
  std::vector<Element> inverse_;
  std::vector<Element> idem_;
  std::vector<Element> idempotents_;
  std::optional<Element> identity_;
};

using CarrierPtr = std::shared_ptr<const CliffordSemigroup>;

/// Verifies the Clifford axioms and populates the inverse/idempotent caches.
/// Throws VerificationError naming the first failed axiom and a witness.
CliffordSemigroup verify_clifford(CayleyTable table);
CarrierPtr verify_clifford_shared(CayleyTable table);

// ---- strong semilattices of groups ----------------------------------------

/// Structure map phi_{from,to}: G_from -> G_to for a comparable pair
/// from >= to (meet(from, to) == to).  Images are local indices in G_to.
struct LinkMap {
  int from = 0;
  int to = 0;
  ElementMap images;

  bool operator==(const LinkMap&) const = default;
};

/// [Y; G_a; phi_{a,b}]: a meet table on vertices, one group table per vertex,
/// and one structure map per comparable pair.  Identity links may be omitted;
/// they are filled in during validation.
struct StrongSemilatticeSpec {
  CayleyTable meet;
  std::vector<CayleyTable> groups;
  std::vector<LinkMap> links;
};

/// Checks the spec invariants: meet table is a semilattice, each group table
/// is a group, links exist exactly for comparable pairs, are homomorphisms,
/// respect identities and compose.  Throws VerificationError with code
/// "SpecInvariantViolated" on failure.
void validate_spec(const StrongSemilatticeSpec& spec);

/// A built strong semilattice: the carrier plus its vertex-major layout.
struct SemilatticeCarrier {
  StrongSemilatticeSpec spec;  // normalized: identity links present, sorted
  CarrierPtr carrier;
  std::vector<int> vertex_of;          // element -> vertex
  std::vector<Element> local_of;       // element -> index inside its group
  std::vector<int> offset;             // vertex -> first global element
  std::vector<Element> group_identity; // vertex -> local index of the identity

  Element global(int vertex, Element local) const { return offset[vertex] + local; }
};

/// Builds the Clifford semigroup a*b = phi_{A,AB}(a) * phi_{B,AB}(b) on the
/// disjoint union of the groups, elements ordered vertex-major.
SemilatticeCarrier build_strong_semilattice(const StrongSemilatticeSpec& spec);

struct Decomposition {
  StrongSemilatticeSpec spec;
  std::vector<Element> element_of;  // vertex-major position -> original element
  std::vector<int> vertex_of;       // original element -> vertex
  std::vector<Element> local_of;    // original element -> local index
};

/// Splits S into its semilattice of maximal subgroups G_e = {a : a0 = e} with
/// meet e^f = e*f and structure maps phi_{e,f}(a) = a*f.
Decomposition decompose_to_strong_semilattice(const CliffordSemigroup& S);

// ---- homomorphisms ---------------------------------------------------------

enum class HomKind { All, Isomorphisms };

bool is_homomorphism(const CliffordSemigroup& S, const CliffordSemigroup& T,
                     const ElementMap& f);

/// All homomorphisms S -> T (bijective ones for kind Isomorphisms), sorted
/// lexicographically by images.  Backtracking with partial-product pruning;
/// the unpruned filter lives in the test oracles.
std::vector<ElementMap> enumerate_homomorphisms(const CliffordSemigroup& S,
                                                const CliffordSemigroup& T,
                                                HomKind kind);

// ---- normal subsets --------------------------------------------------------

struct NormalSubsetVerdict {
  bool ok = true;
  /// 1: E(S) not contained; 2: not inverse-closed; 3: a in N, a0*b in N but
  /// a*b not in N; 4: a*b in N but b*a not in N.
  int condition = 0;
  std::array<Element, 2> witness{-1, -1};
};

/// Checks the four normal-subset conditions in order.  Throws
/// PreconditionError("SubsetOutOfRange") on bad input.
NormalSubsetVerdict is_normal_subset(const CliffordSemigroup& S,
                                     const std::vector<Element>& subset);

}  // namespace rotabrace
