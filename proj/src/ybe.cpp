#include "rotabrace/ybe.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "rotabrace/parallel.hpp"

namespace rotabrace {

namespace {

void require_solution(const SolutionMap& r) {
  const int n = r.order;
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  if (n <= 0 || r.left.size() != n2 || r.right.size() != n2)
    throw PreconditionError("SolutionMalformed", "solution component tables are not n x n");
  for (const auto* side : {&r.left, &r.right})
    for (Element x : *side)
      if (x < 0 || x >= n)
        throw PreconditionError("SolutionMalformed", "solution image out of range");
}

}  // namespace

BraidVerdict check_braid(const SolutionMap& r) {
  require_solution(r);
  BraidVerdict v;
  const int n = r.order;
  const long long n3 = static_cast<long long>(n) * n * n;
  const long long hit = par::find_first(n3, [&](long long i) {
    const Element c = static_cast<Element>(i % n);
    const Element b = static_cast<Element>((i / n) % n);
    const Element a = static_cast<Element>(i / (static_cast<long long>(n) * n));
    // r12 r23 r12
    const Element x = r.l(a, b), y = r.r(a, b);
    const Element y2 = r.l(y, c), z2 = r.r(y, c);
    const Element lx = r.l(x, y2), ly = r.r(x, y2), lz = z2;
    // r23 r12 r23
    const Element q = r.l(b, c), s = r.r(b, c);
    const Element p2 = r.l(a, q), q2 = r.r(a, q);
    const Element rx = p2, ry = r.l(q2, s), rz = r.r(q2, s);
    return lx != rx || ly != ry || lz != rz;
  });
  if (hit < n3) {
    v.ok = false;
    v.witness = {static_cast<Element>(hit / (static_cast<long long>(n) * n)),
                 static_cast<Element>((hit / n) % n), static_cast<Element>(hit % n)};
  }
  return v;
}

std::pair<bool, bool> nondegeneracy(const SolutionMap& r) {
  require_solution(r);
  const int n = r.order;
  bool left = true, right = true;
  std::vector<char> seen(n);
  for (Element x = 0; x < n && left; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) seen[r.l(x, b)] = 1;
    left = std::find(seen.begin(), seen.end(), 0) == seen.end();
  }
  for (Element x = 0; x < n && right; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) seen[r.r(a, x)] = 1;
    right = std::find(seen.begin(), seen.end(), 0) == seen.end();
  }
  return {left, right};
}

namespace {

SolutionMap finalize(SolutionMap r, const char* origin) {
  const BraidVerdict v = check_braid(r);
  if (!v.ok)
    throw VerificationError("BraidRelationFailed",
                            {v.witness[0], v.witness[1], v.witness[2]},
                            std::string(origin) + ": braid relation failed");
  r.braid_ok = true;
  const auto [left, right] = nondegeneracy(r);
  r.left_nondeg = left;
  r.right_nondeg = right;
  return r;
}

}  // namespace

SolutionMap solution_from_brace(const DualWeakBrace& B) {
  const int n = B.order();
  SolutionMap r;
  r.order = n;
  r.left.resize(static_cast<std::size_t>(n) * n);
  r.right.resize(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      r.left[static_cast<std::size_t>(a) * n + b] = B.lambda(a, b);
      r.right[static_cast<std::size_t>(a) * n + b] = B.rho(b, a);
    }
  return finalize(std::move(r), "solution_from_brace");
}

SolutionMap solution_from_operator(const RotaBaxterOperator& R) {
  const CliffordSemigroup& S = *R.carrier;
  const RbVerdict rv = check_rota_baxter(S, R.images);
  if (!rv.ok)
    throw VerificationError("RB" + std::to_string(rv.identity), {rv.witness[0], rv.witness[1]},
                            "not a Rota-Baxter operator: " + rv.describe());
  const int n = S.order();
  SolutionMap r;
  r.order = n;
  r.left.resize(static_cast<std::size_t>(n) * n);
  r.right.resize(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    const Element ra = R.images[a];
    for (Element b = 0; b < n; ++b) {
      const Element u = S.op(S.op(S.op(S.idem(a), ra), b), S.inverse(ra));
      const Element ru = R.images[u];
      const Element rho =
          S.op(S.op(S.op(S.op(S.inverse(ru), S.inverse(u)), a), u), ru);
      r.left[static_cast<std::size_t>(a) * n + b] = u;
      r.right[static_cast<std::size_t>(a) * n + b] = rho;
    }
  }
  return finalize(std::move(r), "solution_from_operator");
}

namespace {

// Composition of maps on pairs: (f . g)(x) = f(g(x)).
SolutionMap compose(const SolutionMap& f, const SolutionMap& g) {
  const int n = f.order;
  SolutionMap out;
  out.order = n;
  out.left.resize(static_cast<std::size_t>(n) * n);
  out.right.resize(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element x = g.l(a, b), y = g.r(a, b);
      out.left[static_cast<std::size_t>(a) * n + b] = f.l(x, y);
      out.right[static_cast<std::size_t>(a) * n + b] = f.r(x, y);
    }
  return out;
}

bool is_identity(const SolutionMap& f) {
  for (Element a = 0; a < f.order; ++a)
    for (Element b = 0; b < f.order; ++b)
      if (f.l(a, b) != a || f.r(a, b) != b) return false;
  return true;
}

}  // namespace

RegularityReport regularity_report(const DualWeakBrace& B, SolutionMap& r) {
  if (!(r == solution_from_brace(B)))
    throw PreconditionError("SolutionMismatch",
                            "regularity_report requires r = solution_from_brace(B)");
  const int n = B.order();

  RegularityReport rep;
  rep.rop = solution_from_brace(opposite_brace(B));

  rep.r_rop_r = compose(r, compose(rep.rop, r)) == r;
  rep.rop_r_rop = compose(rep.rop, compose(r, rep.rop)) == rep.rop;
  rep.composites_commute = compose(r, rep.rop) == compose(rep.rop, r);

  auto lam = [&](Element a, Element b) { return B.lambda(a, b); };
  auto rho = [&](Element b, Element a) { return B.rho(b, a); };
  rep.lambda_regular = rep.lambda_inv_regular = rep.lambda_composites_commute = true;
  rep.rho_regular = rep.rho_inv_regular = rep.rho_composites_commute = true;
  for (Element a = 0; a < n; ++a) {
    const Element ai = B.inv(a);
    for (Element b = 0; b < n; ++b) {
      rep.lambda_regular &= lam(a, lam(ai, lam(a, b))) == lam(a, b);
      rep.lambda_inv_regular &= lam(ai, lam(a, lam(ai, b))) == lam(ai, b);
      rep.lambda_composites_commute &= lam(a, lam(ai, b)) == lam(ai, lam(a, b));
      rep.rho_regular &= rho(a, rho(ai, rho(a, b))) == rho(a, b);
      rep.rho_inv_regular &= rho(ai, rho(a, rho(ai, b))) == rho(ai, b);
      rep.rho_composites_commute &= rho(a, rho(ai, b)) == rho(ai, rho(a, b));
    }
  }

  const auto [left, right] = nondegeneracy(r);
  rep.left_nondegenerate = left;
  rep.right_nondegenerate = right;

  rep.skew = B.additive().is_group();
  std::set<std::pair<Element, Element>> image;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) image.insert({r.l(a, b), r.r(a, b)});
  rep.r_bijective = image.size() == static_cast<std::size_t>(n) * n;
  rep.inverse_is_opposite = rep.r_bijective && is_identity(compose(r, rep.rop)) &&
                            is_identity(compose(rep.rop, r));

  if (!r.braid_ok) r.braid_ok = check_braid(r).ok;
  if (!r.left_nondeg) r.left_nondeg = left;
  if (!r.right_nondeg) r.right_nondeg = right;
  if (rep.r_rop_r && rep.rop_r_rop && rep.composites_commute)
    r.completely_regular_with = std::make_shared<const SolutionMap>(rep.rop);
  return rep;
}

bool is_equivalence_witness(const SolutionMap& r1, const SolutionMap& r2,
                            const ElementMap& f) {
  require_solution(r1);
  require_solution(r2);
  if (r1.order != r2.order || static_cast<int>(f.size()) != r1.order) return false;
  std::vector<char> seen(r1.order, 0);
  for (Element x : f) {
    if (x < 0 || x >= r1.order || seen[x]) return false;
    seen[x] = 1;
  }
  for (Element a = 0; a < r1.order; ++a)
    for (Element b = 0; b < r1.order; ++b)
      if (f[r1.l(a, b)] != r2.l(f[a], f[b]) || f[r1.r(a, b)] != r2.r(f[a], f[b]))
        return false;
  return true;
}

std::optional<ElementMap> solutions_equivalent(const SolutionMap& r1, const SolutionMap& r2,
                                               int max_order) {
  require_solution(r1);
  require_solution(r2);
  if (r1.order != r2.order) return std::nullopt;
  const int n = r1.order;
  if (n > max_order) throw CarrierTooLarge(n, max_order);

  // Equivalence-invariant signature: fixed-point and diagonal statistics of
  // the lambda/rho families attached to an element.
  auto signature = [n](const SolutionMap& r, Element a) {
    int lfix = 0, rfix = 0, lfix2 = 0, rfix2 = 0;
    for (Element b = 0; b < n; ++b) {
      lfix += r.l(a, b) == b;
      rfix += r.r(a, b) == a;
      lfix2 += r.l(b, a) == a;
      rfix2 += r.r(b, a) == b;
    }
    return std::make_tuple(lfix, rfix, lfix2, rfix2, r.l(a, a) == a, r.r(a, a) == a);
  };
  std::vector<std::vector<Element>> candidates(n);
  for (Element a = 0; a < n; ++a) {
    const auto sig = signature(r1, a);
    for (Element x = 0; x < n; ++x)
      if (signature(r2, x) == sig) candidates[a].push_back(x);
    if (candidates[a].empty()) return std::nullopt;
  }

  ElementMap f(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](Element k) {
    for (Element a = 0; a <= k; ++a)
      for (Element b = 0; b <= k; ++b) {
        const Element la = r1.l(a, b), ra = r1.r(a, b);
        if (la <= k && f[la] != r2.l(f[a], f[b])) return false;
        if (ra <= k && f[ra] != r2.r(f[a], f[b])) return false;
      }
    return true;
  };
  ElementMap found;
  auto rec = [&](auto&& self, Element k) -> bool {
    if (k == n) {
      found = f;
      return true;
    }
    for (Element img : candidates[k]) {
      if (used[img]) continue;
      f[k] = img;
      used[img] = 1;
      if (consistent(k) && self(self, k + 1)) return true;
      used[img] = 0;
      f[k] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return found;
  return std::nullopt;
}

}  // namespace rotabrace
