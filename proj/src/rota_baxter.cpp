#include "rotabrace/rota_baxter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rotabrace/parallel.hpp"

namespace rotabrace {

std::string RbVerdict::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "RB" << identity << " fails at (" << witness[0];
  if (witness[1] >= 0) os << ", " << witness[1];
  os << ")";
  return os.str();
}

namespace {

void require_map(const CliffordSemigroup& S, const ElementMap& images) {
  if (static_cast<int>(images.size()) != S.order())
    throw PreconditionError("OperatorMalformed", "operator image list has wrong length");
  for (Element x : images)
    if (x < 0 || x >= S.order())
      throw PreconditionError("OperatorMalformed", "operator image out of range");
}

}  // namespace

RbVerdict check_rota_baxter(const CliffordSemigroup& S, const ElementMap& images) {
  require_map(S, images);
  RbVerdict v;
  const int n = S.order();
  for (Element a = 0; a < n; ++a) {
    if (S.op(a, S.idem(images[a])) != a) {
      v.ok = false;
      v.identity = 2;
      v.witness = {a, -1};
      return v;
    }
  }
  const long long n2 = static_cast<long long>(n) * n;
  const long long hit = par::find_first(n2, [&](long long i) {
    const Element a = static_cast<Element>(i / n);
    const Element b = static_cast<Element>(i % n);
    const Element ra = images[a];
    const Element inner = S.op(S.op(S.op(a, ra), b), S.inverse(ra));
    return S.op(ra, images[b]) != images[inner];
  });
  if (hit < n2) {
    v.ok = false;
    v.identity = 1;
    v.witness = {static_cast<Element>(hit / n), static_cast<Element>(hit % n)};
  }
  return v;
}

bool is_rota_baxter(const CliffordSemigroup& S, const ElementMap& images) {
  return check_rota_baxter(S, images).ok;
}

// ---- enumeration -------------------------------------------------------------

namespace {

struct RbSearch {
  const CliffordSemigroup& S;
  std::vector<Element> order;  // assignment order: idempotents first

  explicit RbSearch(const CliffordSemigroup& s) : S(s) {
    for (Element e : S.idempotents()) order.push_back(e);
    std::vector<Element> rest;
    for (Element a = 0; a < S.order(); ++a)
      if (!S.is_idempotent(a)) rest.push_back(a);
    std::sort(rest.begin(), rest.end(), [&](Element a, Element b) {
      return std::make_pair(S.idem(a), a) < std::make_pair(S.idem(b), b);
    });
    order.insert(order.end(), rest.begin(), rest.end());
  }

  // Candidate images for order[k] given the partial assignment.  Idempotents
  // must map to idempotents below them in the natural order (RB2 plus the
  // derived fact that R sends idempotents to idempotents); everything else
  // must land in the group over the already-fixed image of its idempotent.
  std::vector<Element> candidates(const ElementMap& images, int k) const {
    const Element a = order[k];
    std::vector<Element> out;
    if (S.is_idempotent(a)) {
      for (Element x : S.idempotents())
        if (S.op(a, x) == a) out.push_back(x);
    } else {
      const Element f = images[S.idem(a)];
      if (S.op(a, f) == a)
        for (Element x = 0; x < S.order(); ++x)
          if (S.idem(x) == f) out.push_back(x);
    }
    return out;
  }

  // RB1 restricted to assigned pairs whose inner argument is also assigned.
  bool partial_rb1(const ElementMap& images, int upto) const {
    for (int i = 0; i < upto; ++i)
      for (int j = 0; j < upto; ++j) {
        const Element a = order[i], b = order[j];
        const Element ra = images[a];
        const Element inner = S.op(S.op(S.op(a, ra), b), S.inverse(ra));
        if (images[inner] < 0) continue;
        if (S.op(ra, images[b]) != images[inner]) return false;
      }
    return true;
  }

  void dfs(ElementMap& images, int k, std::vector<ElementMap>& out) const {
    if (k == static_cast<int>(order.size())) {
      if (check_rota_baxter(S, images).ok) out.push_back(images);
      return;
    }
    for (Element x : candidates(images, k)) {
      images[order[k]] = x;
      if (partial_rb1(images, k + 1)) dfs(images, k + 1, out);
      images[order[k]] = -1;
    }
  }
};

}  // namespace

std::vector<RotaBaxterOperator> enumerate_rota_baxter(const CarrierPtr& Sp,
                                                      const RbOptions& opts) {
  const CliffordSemigroup& S = *Sp;
  const int n = S.order();
  if (n > opts.max_order) throw CarrierTooLarge(n, opts.max_order);

  RbSearch search(S);

  // Seed the search with every consistent assignment of the first couple of
  // positions, then run the per-seed subtrees independently.
  const int seed_depth = std::min(2, n);
  std::vector<ElementMap> seeds;
  {
    ElementMap images(n, -1);
    auto grow = [&](auto&& self, int k) -> void {
      if (k == seed_depth) {
        seeds.push_back(images);
        return;
      }
      for (Element x : search.candidates(images, k)) {
        images[search.order[k]] = x;
        if (search.partial_rb1(images, k + 1)) self(self, k + 1);
        images[search.order[k]] = -1;
      }
    };
    grow(grow, 0);
  }

  std::vector<std::vector<ElementMap>> buckets(seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(par::effective_workers())
#endif
  for (int s = 0; s < static_cast<int>(seeds.size()); ++s) {
    ElementMap images = seeds[s];
    search.dfs(images, seed_depth, buckets[s]);
  }

  std::vector<RotaBaxterOperator> out;
  for (auto& bucket : buckets)
    for (auto& images : bucket) out.push_back({Sp, std::move(images)});
  std::sort(out.begin(), out.end(),
            [](const RotaBaxterOperator& a, const RotaBaxterOperator& b) {
              return a.images < b.images;
            });
  return out;
}

// ---- elementary / opposite / equivalence -------------------------------------

std::pair<RotaBaxterOperator, RotaBaxterOperator> elementary_operators(const CarrierPtr& Sp) {
  const CliffordSemigroup& S = *Sp;
  RotaBaxterOperator E{Sp, ElementMap(S.order())};
  RotaBaxterOperator O{Sp, ElementMap(S.order())};
  for (Element a = 0; a < S.order(); ++a) {
    E.images[a] = S.idem(a);
    O.images[a] = S.inverse(a);
  }
  for (const auto* r : {&E, &O}) {
    const RbVerdict v = check_rota_baxter(S, r->images);
    if (!v.ok)
      throw VerificationError("RB" + std::to_string(v.identity),
                              {v.witness[0], v.witness[1]},
                              "elementary operator failed verification: " + v.describe());
  }
  return {std::move(E), std::move(O)};
}

RotaBaxterOperator opposite_operator(const RotaBaxterOperator& R) {
  const CliffordSemigroup& S = *R.carrier;
  require_map(S, R.images);
  RotaBaxterOperator out{R.carrier, ElementMap(S.order())};
  for (Element a = 0; a < S.order(); ++a) {
    const Element na = S.inverse(a);
    out.images[a] = S.op(na, R.images[na]);
  }
  const RbVerdict v = check_rota_baxter(S, out.images);
  if (!v.ok)
    throw VerificationError("RB" + std::to_string(v.identity), {v.witness[0], v.witness[1]},
                            "opposite operator failed verification: " + v.describe());
  return out;
}

std::optional<ElementMap> equivalent_operators(const RotaBaxterOperator& R1,
                                               const RotaBaxterOperator& R2,
                                               int max_order) {
  if (!R1.carrier || !R2.carrier || R1.carrier->table() != R2.carrier->table())
    throw PreconditionError("CarrierMismatch",
                            "operator equivalence requires a common carrier");
  const CliffordSemigroup& S = *R1.carrier;
  if (S.order() > max_order) throw CarrierTooLarge(S.order(), max_order);
  require_map(S, R1.images);
  require_map(S, R2.images);

  for (const ElementMap& psi :
       enumerate_homomorphisms(S, S, HomKind::Isomorphisms)) {
    bool match = true;
    for (Element a = 0; a < S.order() && match; ++a)
      match = psi[R1.images[a]] == R2.images[psi[a]];
    if (match) return psi;
  }
  return std::nullopt;
}

// ---- gluing -------------------------------------------------------------------

ElementMap glue_componentwise(const SemilatticeCarrier& sc,
                              const std::vector<ElementMap>& components) {
  const int m = sc.spec.meet.order;
  if (static_cast<int>(components.size()) != m)
    throw PreconditionError("OperatorMalformed", "one component map per vertex required");
  for (int v = 0; v < m; ++v) {
    const int k = sc.spec.groups[v].order;
    if (static_cast<int>(components[v].size()) != k)
      throw PreconditionError("OperatorMalformed",
                              "component at vertex " + std::to_string(v) +
                                  " has wrong length");
    for (Element x : components[v])
      if (x < 0 || x >= k)
        throw PreconditionError("OperatorMalformed", "component image out of range");
  }
  ElementMap images(sc.carrier->order());
  for (Element a = 0; a < sc.carrier->order(); ++a) {
    const int v = sc.vertex_of[a];
    images[a] = sc.global(v, components[v][sc.local_of[a]]);
  }
  return images;
}

RotaBaxterOperator strong_operator_from_components(const SemilatticeCarrier& sc,
                                                   const std::vector<ElementMap>& components) {
  ElementMap images = glue_componentwise(sc, components);

  std::map<std::pair<int, int>, const LinkMap*> link_of;
  for (const LinkMap& l : sc.spec.links) link_of[{l.from, l.to}] = &l;

  const int m = sc.spec.meet.order;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || sc.spec.meet.at(a, b) != b) continue;
      const ElementMap& phi = link_of.at({a, b})->images;
      for (Element x = 0; x < sc.spec.groups[a].order; ++x)
        if (components[b][phi[x]] != phi[components[a][x]])
          throw VerificationError(
              "ConditionViolated", {a, b, x},
              "components do not commute with the structure map " +
                  std::to_string(a) + "->" + std::to_string(b) + " at " +
                  std::to_string(x));
    }

  const RbVerdict v = check_rota_baxter(*sc.carrier, images);
  if (!v.ok)
    throw VerificationError("RB" + std::to_string(v.identity), {v.witness[0], v.witness[1]},
                            "glued operator failed verification: " + v.describe());
  return {sc.carrier, std::move(images)};
}

// ---- exact factorizations ------------------------------------------------------

namespace {

// All nonempty subsets closed under the operation, as sorted member lists.
std::vector<std::vector<Element>> subsemigroups(const CliffordSemigroup& S) {
  const int n = S.order();
  std::vector<std::vector<Element>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (Element b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        closed = (mask >> S.op(a, b)) & 1;
      }
    }
    if (!closed) continue;
    std::vector<Element> members;
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<ExactFactorization> find_exact_factorizations(const CarrierPtr& Sp,
                                                          int max_order) {
  const CliffordSemigroup& S = *Sp;
  const int n = S.order();
  if (n > max_order) throw CarrierTooLarge(n, max_order);
  if (!S.identity())
    throw PreconditionError("NotAMonoid", "exact factorizations require a monoid");

  const auto subs = subsemigroups(S);
  std::vector<ExactFactorization> out;
  for (const auto& u : subs) {
    for (const auto& v : subs) {
      if (u.size() * v.size() != static_cast<std::size_t>(n)) continue;
      std::vector<std::array<Element, 2>> parts(n, {-1, -1});
      bool unique = true;
      for (Element a : u) {
        for (Element b : v) {
          const Element ab = S.op(a, b);
          if (parts[ab][0] >= 0) {
            unique = false;
            break;
          }
          parts[ab] = {a, b};
        }
        if (!unique) break;
      }
      if (!unique) continue;
      bool covers = true;
      for (Element a = 0; a < n && covers; ++a) covers = parts[a][0] >= 0;
      if (covers) out.push_back({u, v, std::move(parts)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ExactFactorization& a, const ExactFactorization& b) {
    return std::tie(a.u_members, a.v_members) < std::tie(b.u_members, b.v_members);
  });
  return out;
}

std::pair<RotaBaxterOperator, RotaBaxterOperator> rb_from_exact_factorization(
    const CarrierPtr& Sp, const ExactFactorization& f) {
  const CliffordSemigroup& S = *Sp;
  if (static_cast<int>(f.parts.size()) != S.order())
    throw PreconditionError("OperatorMalformed", "factorization does not match carrier");
  RotaBaxterOperator R{Sp, ElementMap(S.order())};
  RotaBaxterOperator T{Sp, ElementMap(S.order())};
  for (Element a = 0; a < S.order(); ++a) {
    const Element u = f.parts[a][0], v = f.parts[a][1];
    R.images[a] = S.inverse(v);
    T.images[a] = S.op(S.idem(u), S.inverse(v));
  }
  for (const auto* r : {&R, &T}) {
    const RbVerdict ver = check_rota_baxter(S, r->images);
    if (!ver.ok)
      throw VerificationError("RB" + std::to_string(ver.identity),
                              {ver.witness[0], ver.witness[1]},
                              "factorization operator failed verification: " + ver.describe());
  }
  return {std::move(R), std::move(T)};
}

// ---- structured endomorphic families --------------------------------------------

namespace {

bool commutative_image(const CliffordSemigroup& S, const ElementMap& images) {
  for (Element x : images)
    for (Element y : images)
      if (S.op(x, y) != S.op(y, x)) return false;
  return true;
}

}  // namespace

std::vector<RotaBaxterOperator> commutative_rb_endomorphisms(const SemilatticeCarrier& sc) {
  const CliffordSemigroup& S = *sc.carrier;
  const int m = sc.spec.meet.order;

  std::vector<CarrierPtr> groups;
  for (int v = 0; v < m; ++v) groups.push_back(verify_clifford_shared(sc.spec.groups[v]));

  std::map<std::pair<int, int>, const LinkMap*> link_of;
  for (const LinkMap& l : sc.spec.links) link_of[{l.from, l.to}] = &l;

  // Vertex maps h with a <= h(a) preserving the meet.
  std::vector<std::vector<int>> hs;
  std::vector<int> h(m, 0);
  auto grow_h = [&](auto&& self, int k) -> void {
    if (k == m) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (h[sc.spec.meet.at(a, b)] != sc.spec.meet.at(h[a], h[b])) return;
      hs.push_back(h);
      return;
    }
    for (int img = 0; img < m; ++img) {
      if (sc.spec.meet.at(k, img) != k) continue;  // need k <= h(k)
      h[k] = img;
      self(self, k + 1);
    }
  };
  grow_h(grow_h, 0);

  std::vector<RotaBaxterOperator> out;
  for (const auto& hv : hs) {
    // Per vertex: homomorphisms G_a -> G_{h(a)} with commutative image.
    std::vector<std::vector<ElementMap>> choices(m);
    for (int v = 0; v < m; ++v) {
      for (const ElementMap& f :
           enumerate_homomorphisms(*groups[v], *groups[hv[v]], HomKind::All)) {
        if (commutative_image(*groups[hv[v]], f)) choices[v].push_back(f);
      }
    }

    std::vector<const ElementMap*> pick(m, nullptr);
    auto assemble = [&](auto&& self, int v) -> void {
      if (v == m) {
        // Compatibility with the structure maps on comparable pairs.
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (a == b || sc.spec.meet.at(a, b) != b) continue;
            const ElementMap& phi = link_of.at({a, b})->images;
            const ElementMap& psi = link_of.at({hv[a], hv[b]})->images;
            for (Element x = 0; x < sc.spec.groups[a].order; ++x)
              if ((*pick[b])[phi[x]] != psi[(*pick[a])[x]]) return;
          }
        ElementMap images(S.order());
        for (Element g = 0; g < S.order(); ++g) {
          const int v0 = sc.vertex_of[g];
          images[g] = sc.global(hv[v0], (*pick[v0])[sc.local_of[g]]);
        }
        if (is_rota_baxter(S, images) && is_homomorphism(S, S, images) &&
            commutative_image(S, images))
          out.push_back({sc.carrier, std::move(images)});
        return;
      }
      for (const ElementMap& f : choices[v]) {
        pick[v] = &f;
        self(self, v + 1);
      }
      pick[v] = nullptr;
    };
    assemble(assemble, 0);
  }

  std::sort(out.begin(), out.end(),
            [](const RotaBaxterOperator& a, const RotaBaxterOperator& b) {
              return a.images < b.images;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RotaBaxterOperator> idempotent_rb_endomorphisms(const CarrierPtr& Sp) {
  const CliffordSemigroup& S = *Sp;
  if (!S.is_group())
    throw PreconditionError("NotAGroup",
                            "idempotent endomorphic operators require a group carrier");
  const int n = S.order();
  const Element e = *S.identity();

  // All subgroups, by closure of generated subsets.
  std::set<std::vector<Element>> subgroups;
  std::vector<std::vector<Element>> queue = {{e}};
  subgroups.insert({e});
  while (!queue.empty()) {
    const std::vector<Element> H = std::move(queue.back());
    queue.pop_back();
    for (Element g = 0; g < n; ++g) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::set<Element> close(H.begin(), H.end());
      close.insert(g);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Element> cur(close.begin(), close.end());
        for (Element a : cur)
          for (Element b : cur)
            if (close.insert(S.op(a, b)).second) grew = true;
      }
      std::vector<Element> K(close.begin(), close.end());
      if (subgroups.insert(K).second) queue.push_back(std::move(K));
    }
  }

  std::vector<RotaBaxterOperator> out;
  for (const auto& N : subgroups) {
    std::vector<char> inN(n, 0);
    for (Element a : N) inN[a] = 1;
    // Normal with abelian quotient: every commutator lands in N.
    bool good = true;
    for (Element a = 0; a < n && good; ++a)
      for (Element b = 0; b < n && good; ++b)
        good = inN[S.op(S.op(a, b), S.inverse(S.op(b, a)))];
    if (!good) continue;

    for (const auto& T : subgroups) {
      if (N.size() * T.size() != static_cast<std::size_t>(n)) continue;
      bool trivial_meet = true;
      for (Element t : T)
        if (t != e && inN[t]) {
          trivial_meet = false;
          break;
        }
      if (!trivial_meet) continue;

      // R(g) = the unique member of T in the coset N + g.
      ElementMap images(n, -1);
      bool unique = true;
      for (Element g = 0; g < n && unique; ++g) {
        for (Element t : T)
          if (inN[S.op(t, S.inverse(g))]) {
            unique = images[g] < 0;
            if (!unique) break;
            images[g] = t;
          }
        unique = unique && images[g] >= 0;
      }
      if (!unique) continue;

      bool idem = true;
      for (Element g = 0; g < n && idem; ++g) idem = images[images[g]] == images[g];
      if (idem && is_homomorphism(S, S, images) && is_rota_baxter(S, images))
        out.push_back({Sp, std::move(images)});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RotaBaxterOperator& a, const RotaBaxterOperator& b) {
              return a.images < b.images;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rotabrace
