#include "rotabrace/clifford.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rotabrace/parallel.hpp"

namespace rotabrace {

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  if (rows.empty()) throw ParseError("multiplication table is empty");
  CayleyTable t;
  t.order = static_cast<int>(rows.size());
  t.cells.reserve(static_cast<std::size_t>(t.order) * t.order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.order)
      throw ParseError("multiplication table is not square");
    t.cells.insert(t.cells.end(), row.begin(), row.end());
  }
  return t;
}

std::vector<std::vector<Element>> CayleyTable::rows() const {
  std::vector<std::vector<Element>> out(order);
  for (int a = 0; a < order; ++a)
    out[a].assign(cells.begin() + static_cast<std::size_t>(a) * order,
                  cells.begin() + static_cast<std::size_t>(a + 1) * order);
  return out;
}

const char* to_string(CliffordDefect d) {
  switch (d) {
    case CliffordDefect::EntryOutOfRange: return "EntryOutOfRange";
    case CliffordDefect::NotAssociative: return "NotAssociative";
    case CliffordDefect::NoInverse: return "NoInverse";
    case CliffordDefect::NonUniqueInverse: return "NonUniqueInverse";
    case CliffordDefect::NotClifford: return "NotClifford";
    case CliffordDefect::IdempotentNotCentral: return "IdempotentNotCentral";
  }
  return "?";
}

std::string CliffordVerdict::describe() const {
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
  return os.str();
}

namespace {

// Inverses of a under the table, in ascending order: x with axa=a and xax=x.
std::vector<Element> inverses_of(const CayleyTable& t, Element a) {
  std::vector<Element> out;
  for (Element x = 0; x < t.order; ++x) {
    if (t.at(t.at(a, x), a) == a && t.at(t.at(x, a), x) == x) out.push_back(x);
  }
  return out;
}

}  // namespace

CliffordVerdict check_clifford(const CayleyTable& table) {
  CliffordVerdict v;
  const int n = table.order;
  if (n <= 0 || table.cells.size() != static_cast<std::size_t>(n) * n) {
    v.ok = false;
    v.defect = CliffordDefect::EntryOutOfRange;
    v.witness = {0, 0, -1};
    return v;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table.at(a, b) < 0 || table.at(a, b) >= n) {
        v.ok = false;
        v.defect = CliffordDefect::EntryOutOfRange;
        v.witness = {a, b, -1};
        return v;
      }
    }
  }

  // Associativity: one flat n^3 scan, parallel-friendly.
  const long long n3 = static_cast<long long>(n) * n * n;
  const long long hit = par::find_first(n3, [&](long long i) {
    const int c = static_cast<int>(i % n);
    const int b = static_cast<int>((i / n) % n);
    const int a = static_cast<int>(i / (static_cast<long long>(n) * n));
    return table.at(table.at(a, b), c) != table.at(a, table.at(b, c));
  });
  if (hit < n3) {
    v.ok = false;
    v.defect = CliffordDefect::NotAssociative;
    v.witness = {static_cast<Element>(hit / (static_cast<long long>(n) * n)),
                 static_cast<Element>((hit / n) % n),
                 static_cast<Element>(hit % n)};
    return v;
  }

  std::vector<Element> inv(n, -1);
  for (Element a = 0; a < n; ++a) {
    const auto cands = inverses_of(table, a);
    if (cands.empty()) {
      v.ok = false;
      v.defect = CliffordDefect::NoInverse;
      v.witness = {a, -1, -1};
      return v;
    }
    if (cands.size() > 1) {
      v.ok = false;
      v.defect = CliffordDefect::NonUniqueInverse;
      v.witness = {a, cands[0], cands[1]};
      return v;
    }
    inv[a] = cands[0];
  }

  // Complete regularity: a and a^-1 commute.
  for (Element a = 0; a < n; ++a) {
    if (table.at(a, inv[a]) != table.at(inv[a], a)) {
      v.ok = false;
      v.defect = CliffordDefect::NotClifford;
      v.witness = {a, -1, -1};
      return v;
    }
  }

  // Idempotents are central.
  for (Element e = 0; e < n; ++e) {
    if (table.at(e, e) != e) continue;
    for (Element a = 0; a < n; ++a) {
      if (table.at(e, a) != table.at(a, e)) {
        v.ok = false;
        v.defect = CliffordDefect::IdempotentNotCentral;
        v.witness = {e, a, -1};
        return v;
      }
    }
  }
  return v;
}

CliffordSemigroup::CliffordSemigroup(CayleyTable table) : table_(std::move(table)) {
  const int n = table_.order;
  inverse_.resize(n);
  idem_.resize(n);
  for (Element a = 0; a < n; ++a) {
    inverse_[a] = inverses_of(table_, a)[0];
    idem_[a] = table_.at(a, inverse_[a]);
  }
  for (Element e = 0; e < n; ++e)
    if (table_.at(e, e) == e) idempotents_.push_back(e);
  for (Element e : idempotents_) {
    bool ident = true;
    for (Element a = 0; a < n && ident; ++a)
      ident = table_.at(e, a) == a && table_.at(a, e) == a;
    if (ident) {
      identity_ = e;
      break;
    }
  }
}

CliffordSemigroup verify_clifford(CayleyTable table) {
  const CliffordVerdict v = check_clifford(table);
  if (!v.ok) {
    std::vector<int> wit;
    for (Element w : v.witness)
      if (w >= 0) wit.push_back(w);
    throw VerificationError(to_string(v.defect), wit,
                            "not a Clifford semigroup: " + v.describe());
  }
  return CliffordSemigroup(std::move(table));
}

CarrierPtr verify_clifford_shared(CayleyTable table) {
  return std::make_shared<const CliffordSemigroup>(verify_clifford(std::move(table)));
}

// ---- strong semilattices ----------------------------------------------------

namespace {

[[noreturn]] void spec_fail(const std::string& detail, std::vector<int> witness = {}) {
  throw VerificationError("SpecInvariantViolated", std::move(witness),
                          "invalid strong-semilattice spec: " + detail);
}

// Identity of a group table (must exist; spec_fail otherwise).
Element group_identity_of(const CayleyTable& g, int vertex) {
  for (Element e = 0; e < g.order; ++e) {
    bool ident = true;
    for (Element a = 0; a < g.order && ident; ++a)
      ident = g.at(e, a) == a && g.at(a, e) == a;
    if (ident) return e;
  }
  spec_fail("group at vertex " + std::to_string(vertex) + " has no identity", {vertex});
}

bool is_group_table(const CayleyTable& g) {
  const CliffordVerdict v = check_clifford(g);
  if (!v.ok) return false;
  int idems = 0;
  for (Element e = 0; e < g.order; ++e)
    if (g.at(e, e) == e) ++idems;
  return idems == 1;
}

}  // namespace

void validate_spec(const StrongSemilatticeSpec& spec) {
  const int m = spec.meet.order;
  if (m <= 0) spec_fail("empty vertex set");
  if (spec.meet.cells.size() != static_cast<std::size_t>(m) * m)
    spec_fail("meet table is not square");
  if (static_cast<int>(spec.groups.size()) != m)
    spec_fail("vertex count " + std::to_string(m) + " != group count " +
              std::to_string(spec.groups.size()));

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab = spec.meet.at(a, b);
      if (ab < 0 || ab >= m) spec_fail("meet entry out of range", {a, b});
      if (ab != spec.meet.at(b, a)) spec_fail("meet not commutative", {a, b});
    }
  for (int a = 0; a < m; ++a)
    if (spec.meet.at(a, a) != a) spec_fail("meet not idempotent", {a});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (spec.meet.at(spec.meet.at(a, b), c) != spec.meet.at(a, spec.meet.at(b, c)))
          spec_fail("meet not associative", {a, b, c});

  for (int v = 0; v < m; ++v)
    if (!is_group_table(spec.groups[v]))
      spec_fail("vertex " + std::to_string(v) + " is not a group", {v});

  // Exactly one link per strictly comparable pair; identity links optional.
  std::map<std::pair<int, int>, const LinkMap*> link_of;
  for (const LinkMap& l : spec.links) {
    if (l.from < 0 || l.from >= m || l.to < 0 || l.to >= m)
      spec_fail("link endpoints out of range", {l.from, l.to});
    if (spec.meet.at(l.from, l.to) != l.to)
      spec_fail("link " + std::to_string(l.from) + "->" + std::to_string(l.to) +
                    " does not descend the order",
                {l.from, l.to});
    if (!link_of.emplace(std::make_pair(l.from, l.to), &l).second)
      spec_fail("duplicate link", {l.from, l.to});
    const CayleyTable& gf = spec.groups[l.from];
    const CayleyTable& gt = spec.groups[l.to];
    if (static_cast<int>(l.images.size()) != gf.order)
      spec_fail("link image list has wrong length", {l.from, l.to});
    for (Element x : l.images)
      if (x < 0 || x >= gt.order) spec_fail("link image out of range", {l.from, l.to});
    for (Element a = 0; a < gf.order; ++a)
      for (Element b = 0; b < gf.order; ++b)
        if (l.images[gf.at(a, b)] != gt.at(l.images[a], l.images[b]))
          spec_fail("link is not a homomorphism", {l.from, l.to, a, b});
    if (l.from == l.to)
      for (Element a = 0; a < gf.order; ++a)
        if (l.images[a] != a) spec_fail("identity link is not the identity map", {l.from, a});
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && spec.meet.at(a, b) == b && !link_of.count({a, b}))
        spec_fail("missing link", {a, b});

  // phi_{b,c} . phi_{a,b} = phi_{a,c} for a >= b >= c.
  auto image = [&](int from, int to, Element x) {
    if (from == to) {
      auto it = link_of.find({from, to});
      return it == link_of.end() ? x : it->second->images[x];
    }
    return link_of.at({from, to})->images[x];
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (spec.meet.at(a, b) != b || spec.meet.at(b, c) != c) continue;
        for (Element x = 0; x < spec.groups[a].order; ++x)
          if (image(b, c, image(a, b, x)) != image(a, c, x))
            spec_fail("links do not compose", {a, b, c, x});
      }
}

SemilatticeCarrier build_strong_semilattice(const StrongSemilatticeSpec& spec) {
  validate_spec(spec);

  SemilatticeCarrier out;
  out.spec = spec;
  const int m = spec.meet.order;

  // Normalize: make identity links explicit, sort by (from, to).
  std::set<std::pair<int, int>> have;
  for (const LinkMap& l : out.spec.links) have.insert({l.from, l.to});
  for (int v = 0; v < m; ++v)
    if (!have.count({v, v})) {
      LinkMap id{v, v, {}};
      id.images.resize(spec.groups[v].order);
      for (Element a = 0; a < spec.groups[v].order; ++a) id.images[a] = a;
      out.spec.links.push_back(std::move(id));
    }
  std::sort(out.spec.links.begin(), out.spec.links.end(),
            [](const LinkMap& x, const LinkMap& y) {
              return std::tie(x.from, x.to) < std::tie(y.from, y.to);
            });

  out.offset.resize(m);
  int n = 0;
  for (int v = 0; v < m; ++v) {
    out.offset[v] = n;
    n += spec.groups[v].order;
  }
  out.vertex_of.resize(n);
  out.local_of.resize(n);
  out.group_identity.resize(m);
  for (int v = 0; v < m; ++v) {
    out.group_identity[v] = group_identity_of(spec.groups[v], v);
    for (Element a = 0; a < spec.groups[v].order; ++a) {
      out.vertex_of[out.offset[v] + a] = v;
      out.local_of[out.offset[v] + a] = a;
    }
  }

  std::map<std::pair<int, int>, const LinkMap*> link_of;
  for (const LinkMap& l : out.spec.links) link_of[{l.from, l.to}] = &l;

  CayleyTable t(n, std::vector<Element>(static_cast<std::size_t>(n) * n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const int va = out.vertex_of[a], vb = out.vertex_of[b];
      const int vc = spec.meet.at(va, vb);
      const Element la = link_of.at({va, vc})->images[out.local_of[a]];
      const Element lb = link_of.at({vb, vc})->images[out.local_of[b]];
      t.at(a, b) = out.offset[vc] + spec.groups[vc].at(la, lb);
    }

  out.carrier = verify_clifford_shared(std::move(t));
  return out;
}

Decomposition decompose_to_strong_semilattice(const CliffordSemigroup& S) {
  Decomposition d;
  const std::vector<Element>& es = S.idempotents();
  const int m = static_cast<int>(es.size());
  std::vector<int> vertex_index(S.order(), -1);
  for (int v = 0; v < m; ++v) vertex_index[es[v]] = v;

  d.vertex_of.resize(S.order());
  d.local_of.resize(S.order());
  std::vector<std::vector<Element>> members(m);  // vertex -> global elements, ascending
  for (Element a = 0; a < S.order(); ++a) {
    const int v = vertex_index[S.idem(a)];
    d.vertex_of[a] = v;
    d.local_of[a] = static_cast<Element>(members[v].size());
    members[v].push_back(a);
  }
  for (int v = 0; v < m; ++v)
    d.element_of.insert(d.element_of.end(), members[v].begin(), members[v].end());

  d.spec.meet = CayleyTable(m, std::vector<Element>(static_cast<std::size_t>(m) * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      d.spec.meet.at(i, j) = vertex_index[S.op(es[i], es[j])];

  d.spec.groups.resize(m);
  for (int v = 0; v < m; ++v) {
    const int k = static_cast<int>(members[v].size());
    d.spec.groups[v] = CayleyTable(k, std::vector<Element>(static_cast<std::size_t>(k) * k));
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b)
        d.spec.groups[v].at(a, b) = d.local_of[S.op(members[v][a], members[v][b])];
  }

  // phi_{e,f}(a) = a * f, restricted to comparable pairs e > f.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || d.spec.meet.at(i, j) != j) continue;
      LinkMap l{i, j, {}};
      l.images.resize(members[i].size());
      for (std::size_t a = 0; a < members[i].size(); ++a)
        l.images[a] = d.local_of[S.op(members[i][a], es[j])];
      d.spec.links.push_back(std::move(l));
    }
  return d;
}

// ---- homomorphisms ----------------------------------------------------------

bool is_homomorphism(const CliffordSemigroup& S, const CliffordSemigroup& T,
                     const ElementMap& f) {
  if (static_cast<int>(f.size()) != S.order()) return false;
  for (Element x : f)
    if (x < 0 || x >= T.order()) return false;
  for (Element a = 0; a < S.order(); ++a)
    for (Element b = 0; b < S.order(); ++b)
      if (f[S.op(a, b)] != T.op(f[a], f[b])) return false;
  return true;
}

std::vector<ElementMap> enumerate_homomorphisms(const CliffordSemigroup& S,
                                                const CliffordSemigroup& T,
                                                HomKind kind) {
  const int n = S.order(), t = T.order();
  std::vector<ElementMap> out;
  if (kind == HomKind::Isomorphisms && n != t) return out;

  ElementMap f(n, -1);
  std::vector<char> used(t, 0);

  // After assigning f[k], every product a*b whose three participants are all
  // assigned and which involves k must already match.
  auto consistent = [&](Element k) {
    for (Element a = 0; a <= k; ++a)
      for (Element b = 0; b <= k; ++b) {
        const Element ab = S.op(a, b);
        if (ab > k) continue;
        if (a != k && b != k && ab != k) continue;
        if (f[ab] != T.op(f[a], f[b])) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, Element k) -> void {
    if (k == n) {
      out.push_back(f);
      return;
    }
    for (Element img = 0; img < t; ++img) {
      if (kind == HomKind::Isomorphisms && used[img]) continue;
      f[k] = img;
      used[img] = 1;
      if (consistent(k)) self(self, k + 1);
      used[img] = 0;
      f[k] = -1;
    }
  };
  rec(rec, 0);
  return out;  // ascending assignment order == lexicographic order
}

// ---- normal subsets ----------------------------------------------------------

NormalSubsetVerdict is_normal_subset(const CliffordSemigroup& S,
                                     const std::vector<Element>& subset) {
  std::vector<char> in(S.order(), 0);
  for (Element a : subset) {
    if (a < 0 || a >= S.order())
      throw PreconditionError("SubsetOutOfRange",
                              "subset element " + std::to_string(a) + " out of range");
    in[a] = 1;
  }

  NormalSubsetVerdict v;
  for (Element e : S.idempotents())
    if (!in[e]) {
      v.ok = false;
      v.condition = 1;
      v.witness = {e, -1};
      return v;
    }
  for (Element a = 0; a < S.order(); ++a)
    if (in[a] && !in[S.inverse(a)]) {
      v.ok = false;
      v.condition = 2;
      v.witness = {a, -1};
      return v;
    }
  for (Element a = 0; a < S.order(); ++a) {
    if (!in[a]) continue;
    for (Element b = 0; b < S.order(); ++b)
      if (in[S.op(S.idem(a), b)] && !in[S.op(a, b)]) {
        v.ok = false;
        v.condition = 3;
        v.witness = {a, b};
        return v;
      }
  }
  for (Element a = 0; a < S.order(); ++a)
    for (Element b = 0; b < S.order(); ++b)
      if (in[S.op(a, b)] && !in[S.op(b, a)]) {
        v.ok = false;
        v.condition = 4;
        v.witness = {a, b};
        return v;
      }
  return v;
}

}  // namespace rotabrace
