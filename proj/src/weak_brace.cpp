#include "rotabrace/weak_brace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rotabrace/parallel.hpp"

namespace rotabrace {

const char* to_string(BraceDefect d) {
  switch (d) {
    case BraceDefect::AddNotClifford: return "AddNotClifford";
    case BraceDefect::CircNotClifford: return "CircNotClifford";
    case BraceDefect::DistributivityFailed: return "DistributivityFailed";
    case BraceDefect::InverseLawFailed: return "InverseLawFailed";
  }
  return "?";
}

std::string BraceVerdict::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << to_string(defect) << " at (";
  bool first = true;
  for (Element w : witness) {
    if (w < 0) continue;
    if (!first) os << ", ";
    os << w;
    first = false;
  }
  os << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

BraceVerdict check_dual_weak_brace(const CayleyTable& add, const CayleyTable& circ) {
  BraceVerdict v;
  if (add.order != circ.order)
    throw PreconditionError("BraceMalformed", "addition and multiplication tables differ in order");

  const CliffordVerdict av = check_clifford(add);
  if (!av.ok) {
    v.ok = false;
    v.defect = BraceDefect::AddNotClifford;
    v.witness = av.witness;
    v.detail = av.describe();
    return v;
  }
  const CliffordVerdict cv = check_clifford(circ);
  if (!cv.ok) {
    v.ok = false;
    v.defect = BraceDefect::CircNotClifford;
    v.witness = cv.witness;
    v.detail = cv.describe();
    return v;
  }

  const int n = add.order;
  std::vector<Element> neg(n), inv(n);
  {
    const CliffordSemigroup A = verify_clifford(add);
    const CliffordSemigroup C = verify_clifford(circ);
    for (Element a = 0; a < n; ++a) {
      neg[a] = A.inverse(a);
      inv[a] = C.inverse(a);
    }
  }

  const long long n3 = static_cast<long long>(n) * n * n;
  const long long hit = par::find_first(n3, [&](long long i) {
    const Element c = static_cast<Element>(i % n);
    const Element b = static_cast<Element>((i / n) % n);
    const Element a = static_cast<Element>(i / (static_cast<long long>(n) * n));
    const Element lhs = circ.at(a, add.at(b, c));
    const Element rhs = add.at(add.at(circ.at(a, b), neg[a]), circ.at(a, c));
    return lhs != rhs;
  });
  if (hit < n3) {
    v.ok = false;
    v.defect = BraceDefect::DistributivityFailed;
    v.witness = {static_cast<Element>(hit / (static_cast<long long>(n) * n)),
                 static_cast<Element>((hit / n) % n), static_cast<Element>(hit % n)};
    return v;
  }

  for (Element a = 0; a < n; ++a) {
    if (circ.at(a, inv[a]) != add.at(neg[a], a)) {
      v.ok = false;
      v.defect = BraceDefect::InverseLawFailed;
      v.witness = {a, -1, -1};
      return v;
    }
  }
  return v;
}

DualWeakBrace::DualWeakBrace(CarrierPtr add, CarrierPtr circ)
    : add_(std::move(add)), circ_(std::move(circ)) {
  const int n = add_->order();
  // The two semilattices of idempotents coincide; a consequence of the
  // axioms, asserted here as a consistency check.
  if (add_->idempotents() != circ_->idempotents())
    throw VerificationError("InverseLawFailed", {},
                            "idempotents of (S,+) and (S,o) differ");
  lambda_.resize(static_cast<std::size_t>(n) * n);
  rho_.resize(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      lambda_[static_cast<std::size_t>(a) * n + b] =
          add_->op(add_->inverse(a), circ_->op(a, b));
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a) {
      const Element l = lambda_[static_cast<std::size_t>(a) * n + b];
      rho_[static_cast<std::size_t>(b) * n + a] =
          circ_->op(circ_->op(circ_->inverse(l), a), b);
    }
}

DualWeakBrace verify_dual_weak_brace(CayleyTable add, CayleyTable circ) {
  const BraceVerdict v = check_dual_weak_brace(add, circ);
  if (!v.ok) {
    std::vector<int> wit;
    for (Element w : v.witness)
      if (w >= 0) wit.push_back(w);
    throw VerificationError(to_string(v.defect), wit,
                            "not a dual weak brace: " + v.describe());
  }
  return DualWeakBrace(verify_clifford_shared(std::move(add)),
                       verify_clifford_shared(std::move(circ)));
}

DualWeakBrace brace_from_operator(const RotaBaxterOperator& R) {
  const CliffordSemigroup& S = *R.carrier;
  const RbVerdict rv = check_rota_baxter(S, R.images);
  if (!rv.ok)
    throw VerificationError("RB" + std::to_string(rv.identity), {rv.witness[0], rv.witness[1]},
                            "not a Rota-Baxter operator: " + rv.describe());
  const int n = S.order();
  CayleyTable circ(n, std::vector<Element>(static_cast<std::size_t>(n) * n));
  for (Element a = 0; a < n; ++a) {
    const Element ra = R.images[a];
    for (Element b = 0; b < n; ++b)
      circ.at(a, b) = S.op(S.op(S.op(a, ra), b), S.inverse(ra));
  }
  return verify_dual_weak_brace(S.table(), std::move(circ));
}

BiVerdict is_bi_weak_brace(const DualWeakBrace& B) {
  BiVerdict v;
  const int n = B.order();
  const long long n3 = static_cast<long long>(n) * n * n;
  const long long hit = par::find_first(n3, [&](long long i) {
    const Element c = static_cast<Element>(i % n);
    const Element b = static_cast<Element>((i / n) % n);
    const Element a = static_cast<Element>(i / (static_cast<long long>(n) * n));
    const Element lhs = B.add(a, B.circ(b, c));
    const Element rhs = B.circ(B.circ(B.add(a, b), B.inv(a)), B.add(a, c));
    return lhs != rhs;
  });
  if (hit < n3) {
    v.ok = false;
    v.axiom = 1;
    v.witness = {static_cast<Element>(hit / (static_cast<long long>(n) * n)),
                 static_cast<Element>((hit / n) % n), static_cast<Element>(hit % n)};
    return v;
  }
  for (Element a = 0; a < n; ++a)
    if (B.add(a, B.neg(a)) != B.circ(B.inv(a), a)) {
      v.ok = false;
      v.axiom = 2;
      v.witness = {a, -1, -1};
      return v;
    }
  return v;
}

DualWeakBrace opposite_brace(const DualWeakBrace& B) {
  const int n = B.order();
  CayleyTable add(n, std::vector<Element>(static_cast<std::size_t>(n) * n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) add.at(a, b) = B.add(b, a);
  return verify_dual_weak_brace(std::move(add), B.multiplicative().table());
}

// ---- ideals -------------------------------------------------------------------

IdealVerdict is_ideal(const DualWeakBrace& B, const std::vector<Element>& subset) {
  IdealVerdict v;
  const NormalSubsetVerdict a = is_normal_subset(B.additive(), subset);
  if (!a.ok) {
    v.ok = false;
    v.part = 1;
    v.condition = a.condition;
    v.witness = a.witness;
    return v;
  }
  std::vector<char> in(B.order(), 0);
  for (Element x : subset) in[x] = 1;
  for (Element a2 = 0; a2 < B.order(); ++a2)
    for (Element x = 0; x < B.order(); ++x)
      if (in[x] && !in[B.lambda(a2, x)]) {
        v.ok = false;
        v.part = 2;
        v.witness = {a2, x};
        return v;
      }
  const NormalSubsetVerdict c = is_normal_subset(B.multiplicative(), subset);
  if (!c.ok) {
    v.ok = false;
    v.part = 3;
    v.condition = c.condition;
    v.witness = c.witness;
    return v;
  }
  return v;
}

std::vector<Element> socle(const DualWeakBrace& B) {
  std::vector<Element> out;
  for (Element a = 0; a < B.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < B.order() && central; ++b)
      central = B.circ(a, b) == B.add(a, b) && B.add(a, b) == B.add(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Ideal> enumerate_ideals(const DualWeakBrace& B, int max_order) {
  const int n = B.order();
  if (n > max_order) throw CarrierTooLarge(n, max_order);

  // Ideals are closed under both inverses and contain every idempotent, so
  // candidates are unions of the orbits of a |-> -a, a |-> a^ over E(S).
  std::vector<int> cell(n);
  std::iota(cell.begin(), cell.end(), 0);
  auto find = [&](Element a) {
    while (cell[a] != a) a = cell[a] = cell[cell[a]];
    return a;
  };
  auto unite = [&](Element a, Element b) { cell[find(a)] = find(b); };
  for (Element e : B.additive().idempotents()) unite(e, B.additive().idempotents()[0]);
  for (Element a = 0; a < n; ++a) {
    unite(a, B.neg(a));
    unite(a, B.inv(a));
  }

  const int base = find(B.additive().idempotents()[0]);
  std::vector<int> roots;
  for (Element a = 0; a < n; ++a)
    if (find(a) == a && a != base) roots.push_back(a);

  std::vector<Ideal> out;
  for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
    std::vector<Element> members;
    for (Element a = 0; a < n; ++a) {
      const int r = find(a);
      if (r == base) {
        members.push_back(a);
        continue;
      }
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == r && (mask >> i & 1)) {
          members.push_back(a);
          break;
        }
    }
    if (is_ideal(B, members).ok) out.push_back({std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
  return out;
}

std::pair<Ideal, Ideal> ideal_sum_and_product(const DualWeakBrace& B, const Ideal& I,
                                              const Ideal& J) {
  for (const Ideal* id : {&I, &J})
    if (!is_ideal(B, id->members).ok)
      throw PreconditionError("NotAnIdeal", "ideal_sum_and_product requires ideals");

  std::set<Element> sum, prod;
  for (Element a : I.members)
    for (Element b : J.members) {
      sum.insert(B.add(a, b));
      prod.insert(B.circ(a, b));
    }
  Ideal S{{sum.begin(), sum.end()}};
  Ideal P{{prod.begin(), prod.end()}};
  for (const Ideal* id : {&S, &P})
    if (!is_ideal(B, id->members).ok)
      throw VerificationError("NotAnIdeal", {},
                              "sum/product of ideals failed the ideal check");
  return {std::move(S), std::move(P)};
}

// ---- quotients ------------------------------------------------------------------

QuotientResult quotient_brace(const DualWeakBrace& B, const Ideal& I) {
  if (!is_ideal(B, I.members).ok)
    throw PreconditionError("NotAnIdeal", "quotient_brace requires an ideal");

  const int n = B.order();
  std::vector<char> in(n, 0);
  for (Element x : I.members) in[x] = 1;
  auto related = [&](Element a, Element b) {
    return B.zero_part(a) == B.zero_part(b) && in[B.add(B.neg(a), b)];
  };

  ElementMap cls(n, -1);
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    cls[a] = id;
    for (Element b = a + 1; b < n; ++b)
      if (cls[b] < 0 && related(a, b)) cls[b] = id;
  }

  // The relation must be a congruence for both tables; checked outright.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (cls[a] != cls[b]) {
        if (related(a, b))
          throw VerificationError("QuotientIllDefined", {a, b},
                                  "relation is not transitive");
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (cls[B.add(a, c)] != cls[B.add(b, c)] || cls[B.add(c, a)] != cls[B.add(c, b)] ||
            cls[B.circ(a, c)] != cls[B.circ(b, c)] || cls[B.circ(c, a)] != cls[B.circ(c, b)])
          throw VerificationError("QuotientIllDefined", {a, b, c},
                                  "tables are not constant on classes");
      }
    }

  const int k = static_cast<int>(reps.size());
  CayleyTable add(k, std::vector<Element>(static_cast<std::size_t>(k) * k));
  CayleyTable circ(k, std::vector<Element>(static_cast<std::size_t>(k) * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add.at(i, j) = cls[B.add(reps[i], reps[j])];
      circ.at(i, j) = cls[B.circ(reps[i], reps[j])];
    }
  return {verify_dual_weak_brace(std::move(add), std::move(circ)), std::move(cls),
          std::move(reps)};
}

// ---- strong semilattices of skew braces ----------------------------------------------

DualWeakBrace strong_semilattice_of_braces(const BraceSemilatticeSpec& spec) {
  const std::size_t m = spec.add_tables.size();
  if (spec.circ_tables.size() != m || static_cast<std::size_t>(spec.meet.order) != m)
    throw PreconditionError("BraceMalformed",
                            "vertex count mismatch between meet, add and circ tables");
  for (std::size_t v = 0; v < m; ++v) {
    if (spec.add_tables[v].order != spec.circ_tables[v].order)
      throw PreconditionError("BraceMalformed",
                              "add/circ order mismatch at vertex " + std::to_string(v));
    verify_dual_weak_brace(spec.add_tables[v], spec.circ_tables[v]);
  }

  const SemilatticeCarrier A =
      build_strong_semilattice({spec.meet, spec.add_tables, spec.links});
  const SemilatticeCarrier C =
      build_strong_semilattice({spec.meet, spec.circ_tables, spec.links});
  return verify_dual_weak_brace(A.carrier->table(), C.carrier->table());
}

}  // namespace rotabrace
