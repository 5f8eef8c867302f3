#pragma once

// Dual weak braces (S, +, o): both reducts Clifford, connected by
//   a o (b + c) = a o b - a + a o c        (distributivity)
//   a o a^     = -a + a                    (inverse law)
// where -a inverts a in (S,+) and a^ inverts a in (S,o).  Includes the brace
// attached to a Rota-Baxter operator, bi-weakness, opposites, ideals, socle,
// quotients, and strong semilattices of skew braces.

#include <array>
#include <string>
#include <vector>

#include "rotabrace/rota_baxter.hpp"

namespace rotabrace {

enum class BraceDefect {
  AddNotClifford,
  CircNotClifford,
  DistributivityFailed,
  InverseLawFailed,
};

const char* to_string(BraceDefect d);

struct BraceVerdict {
  bool ok = true;
  BraceDefect defect = BraceDefect::DistributivityFailed;
  std::array<Element, 3> witness{-1, -1, -1};
  std::string detail;  // inner Clifford verdict for the *NotClifford defects

  std::string describe() const;
};

BraceVerdict check_dual_weak_brace(const CayleyTable& add, const CayleyTable& circ);

class DualWeakBrace {
 public:
  int order() const { return add_->order(); }
  const CliffordSemigroup& additive() const { return *add_; }
  const CliffordSemigroup& multiplicative() const { return *circ_; }
  CarrierPtr additive_ptr() const { return add_; }
  CarrierPtr multiplicative_ptr() const { return circ_; }

  Element add(Element a, Element b) const { return add_->op(a, b); }
  Element circ(Element a, Element b) const { return circ_->op(a, b); }
  Element neg(Element a) const { return add_->inverse(a); }   // -a
  Element inv(Element a) const { return circ_->inverse(a); }  // a^
  Element zero_part(Element a) const { return add_->idem(a); }  // a0

  /// lambda_a(b) = -a + a o b
  Element lambda(Element a, Element b) const { return lambda_[static_cast<std::size_t>(a) * order() + b]; }
  /// rho_b(a) = lambda_a(b)^ o a o b
  Element rho(Element b, Element a) const { return rho_[static_cast<std::size_t>(b) * order() + a]; }

  friend DualWeakBrace verify_dual_weak_brace(CayleyTable add, CayleyTable circ);

 private:
  DualWeakBrace(CarrierPtr add, CarrierPtr circ);

  CarrierPtr add_;
  CarrierPtr circ_;
  std::vector<Element> lambda_;
  std::vector<Element> rho_;
};

/// Verifies the axioms and builds the brace (lambda/rho cached).  Throws
/// VerificationError whose code names the failed axiom.
DualWeakBrace verify_dual_weak_brace(CayleyTable add, CayleyTable circ);

/// The brace attached to a Rota-Baxter operator: a o b = a + R(a) + b - R(a).
DualWeakBrace brace_from_operator(const RotaBaxterOperator& R);

struct BiVerdict {
  bool ok = true;
  int axiom = 0;  // 1: a+(boc) = (a+b) o a^ o (a+c); 2: a-a = a^ o a
  std::array<Element, 3> witness{-1, -1, -1};
};

BiVerdict is_bi_weak_brace(const DualWeakBrace& B);

/// (S, +^op, o); a dual weak brace again (verified).
DualWeakBrace opposite_brace(const DualWeakBrace& B);

// ---- ideals ------------------------------------------------------------------

struct Ideal {
  std::vector<Element> members;  // sorted

  bool operator==(const Ideal&) const = default;
};

struct IdealVerdict {
  bool ok = true;
  /// 1: not a normal subset of (S,+); 2: not lambda-invariant;
  /// 3: not a normal subset of (S,o).
  int part = 0;
  /// For parts 1 and 3, the failed normal-subset condition (1-4); 0 otherwise.
  int condition = 0;
  std::array<Element, 2> witness{-1, -1};
};

IdealVerdict is_ideal(const DualWeakBrace& B, const std::vector<Element>& subset);

/// Soc(S) = {a : a o b = a + b and a + b = b + a for all b}; an ideal.
std::vector<Element> socle(const DualWeakBrace& B);

/// All ideals, sorted lexicographically by member list.  Candidates are
/// unions of the cells of the closure a ~ -a ~ a^ together with E(S); each is
/// checked with is_ideal.  Throws CarrierTooLarge beyond the cap.
std::vector<Ideal> enumerate_ideals(const DualWeakBrace& B, int max_order = 10);

/// I + J = {a + b} and I o J = {a o b}; ideals again (verified).  Throws
/// PreconditionError("NotAnIdeal") when an input is not an ideal.
std::pair<Ideal, Ideal> ideal_sum_and_product(const DualWeakBrace& B, const Ideal& I,
                                              const Ideal& J);

// ---- quotients ----------------------------------------------------------------

struct QuotientResult {
  DualWeakBrace brace;
  ElementMap projection;              // element -> class index
  std::vector<Element> representatives;  // class index -> least member
};

/// Quotient modulo the congruence  a ~ b  iff  a0 = b0 and -a + b in I.
/// Class indices follow ascending least representatives.  Well-definedness of
/// both induced tables is checked mechanically before the quotient brace is
/// verified.  Throws PreconditionError("NotAnIdeal") on bad input.
QuotientResult quotient_brace(const DualWeakBrace& B, const Ideal& I);

// ---- strong semilattices of skew braces ------------------------------------------

/// Vertex data are skew braces (one add and one circ table per vertex); links
/// must be homomorphisms for both tables simultaneously.
struct BraceSemilatticeSpec {
  CayleyTable meet;
  std::vector<CayleyTable> add_tables;
  std::vector<CayleyTable> circ_tables;
  std::vector<LinkMap> links;
};

/// Builds both strong semilattices on the shared layout and verifies the
/// result is a dual weak brace.
DualWeakBrace strong_semilattice_of_braces(const BraceSemilatticeSpec& spec);

}  // namespace rotabrace
