#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rotabrace/catalog.hpp"
#include "rotabrace/rota_baxter.hpp"

using namespace rotabrace;

namespace {

StrongSemilatticeSpec chain_spec() {
  StrongSemilatticeSpec s;
  s.meet = CayleyTable::from_rows({{0, 1}, {1, 1}});
  s.groups = {CayleyTable::from_rows({{0, 1}, {1, 0}}),
              CayleyTable::from_rows({{0, 1}, {1, 0}})};
  s.links = {{0, 1, {0, 1}}};
  return s;
}

// Same layout as the CS3 builtin: Z2 on {0,1} over a trivial bottom {2}.
StrongSemilatticeSpec cs3_spec() {
  StrongSemilatticeSpec s;
  s.meet = CayleyTable::from_rows({{0, 1}, {1, 1}});
  s.groups = {CayleyTable::from_rows({{0, 1}, {1, 0}}), CayleyTable::from_rows({{0}})};
  s.links = {{0, 1, {0, 0}}};
  return s;
}

}  // namespace

TEST_CASE("check_rota_baxter verdicts") {
  auto z4 = load_builtin("Z/4").carrier;
  CHECK(is_rota_baxter(*z4, {0, 0, 0, 0}));
  CHECK(is_rota_baxter(*z4, {0, 1, 2, 3}));
  CHECK(is_rota_baxter(*z4, {0, 2, 0, 2}));  // a -> 2a, an additive endomorphism
  CHECK(is_rota_baxter(*z4, {0, 3, 2, 1}));

  auto v = check_rota_baxter(*z4, {0, 2, 1, 2});
  CHECK_FALSE(v.ok);
  CHECK(v.identity == 1);
  CHECK(v.witness[0] == 1);
  CHECK(v.witness[1] == 1);

  auto cs3 = load_builtin("CS3").carrier;
  auto w = check_rota_baxter(*cs3, {0, 2, 2});  // R(1) lives in the wrong component
  CHECK_FALSE(w.ok);
  CHECK(w.identity == 2);
  CHECK(w.witness[0] == 1);

  CHECK_THROWS_AS(check_rota_baxter(*z4, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(check_rota_baxter(*z4, {0, 1, 2, 9}), PreconditionError);
}

TEST_CASE("enumeration agrees with the unpruned filter") {
  const std::vector<std::pair<const char*, size_t>> expected = {
      {"Z/2", 2}, {"Z/3", 3}, {"Z/4", 4},  {"V4", 16},        {"Z/6", 6},
      {"S3", 8},  {"CS3", 3}, {"SL2", 2},  {"CHAIN-Z2Z2", 4},
  };
  for (auto [name, count] : expected) {
    auto e = load_builtin(name);
    auto lib = enumerate_rota_baxter(e.carrier, {8});
    CHECK_MESSAGE(lib.size() == count, name);
    CHECK_MESSAGE(oracle::images_of(lib) == oracle::enumerate_rb_raw(e.carrier->table()), name);
    for (const auto& op : lib) CHECK(is_rota_baxter(*e.carrier, op.images));
  }
}

TEST_CASE("frozen operator lists") {
  auto cs3 = load_builtin("CS3");
  CHECK(oracle::images_of(enumerate_rota_baxter(cs3.carrier, {8})) ==
        std::vector<ElementMap>{{0, 0, 0}, {0, 0, 2}, {0, 1, 2}});
  auto sl2 = load_builtin("SL2");
  CHECK(oracle::images_of(enumerate_rota_baxter(sl2.carrier, {8})) ==
        std::vector<ElementMap>{{0, 0}, {0, 1}});
  auto s3 = load_builtin("S3");
  CHECK(oracle::images_of(enumerate_rota_baxter(s3.carrier, {8})) ==
        std::vector<ElementMap>{{0, 0, 0, 0, 0, 0},
                                {0, 0, 3, 4, 3, 4},
                                {0, 1, 1, 0, 0, 1},
                                {0, 1, 2, 4, 3, 5},
                                {0, 2, 2, 0, 0, 2},
                                {0, 3, 4, 4, 3, 0},
                                {0, 4, 0, 4, 3, 3},
                                {0, 5, 5, 0, 0, 5}});
  auto chain = load_builtin("CHAIN-Z2Z2");
  CHECK(oracle::images_of(enumerate_rota_baxter(chain.carrier, {8})) ==
        std::vector<ElementMap>{{0, 0, 0, 0}, {0, 0, 2, 2}, {0, 1, 0, 1}, {0, 1, 2, 3}});
}

TEST_CASE("enumeration cap") {
  std::vector<std::vector<Element>> rows(12, std::vector<Element>(12));
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) rows[a][b] = (a + b) % 12;
  auto big = verify_clifford_shared(CayleyTable::from_rows(rows));
  try {
    enumerate_rota_baxter(big, {8});
    CHECK(false);
  } catch (const CarrierTooLarge& e) {
    CHECK(e.order() == 12);
    CHECK(e.cap() == 8);
  }
  CHECK(enumerate_rota_baxter(big, {12}).size() == 12);  // endos of Z/12
}

TEST_CASE("abelian carriers enumerate to the additive endomorphisms") {
  for (const char* name : {"Z/2", "Z/3", "Z/4", "V4", "Z/6"}) {
    auto e = load_builtin(name);
    auto ops = oracle::images_of(enumerate_rota_baxter(e.carrier, {8}));
    auto endos = enumerate_homomorphisms(*e.carrier, *e.carrier, HomKind::All);
    CHECK_MESSAGE(ops == endos, name);
  }
}

TEST_CASE("elementary operators") {
  auto cs3 = load_builtin("CS3");
  auto [E, O] = elementary_operators(cs3.carrier);
  CHECK(E.images == ElementMap{0, 0, 2});  // a -> a0
  CHECK(O.images == ElementMap{0, 1, 2});  // a -> -a; every CS3 element is self-inverse
  auto s3 = load_builtin("S3");
  auto [E2, O2] = elementary_operators(s3.carrier);
  CHECK(E2.images == ElementMap{0, 0, 0, 0, 0, 0});
  CHECK(O2.images == ElementMap{0, 1, 2, 4, 3, 5});
}

TEST_CASE("opposite operator") {
  auto z4 = load_builtin("Z/4").carrier;
  RotaBaxterOperator id{z4, {0, 1, 2, 3}};
  CHECK(opposite_operator(id).images == ElementMap{0, 2, 0, 2});
  CHECK(opposite_operator(opposite_operator(id)).images == id.images);

  // On non-groups the double opposite lands on a0 + R(a), not on R itself.
  auto cs3 = load_builtin("CS3").carrier;
  RotaBaxterOperator cz{cs3, {0, 0, 0}};
  CHECK(opposite_operator(cz).images == ElementMap{0, 1, 2});
  CHECK(opposite_operator(opposite_operator(cz)).images == ElementMap{0, 0, 2});
  for (const char* name : {"Z/2", "Z/3", "Z/4", "V4", "Z/6", "S3", "CS3", "SL2", "CHAIN-Z2Z2"}) {
    auto e = load_builtin(name);
    auto& S = *e.carrier;
    for (const auto& R : enumerate_rota_baxter(e.carrier, {8})) {
      auto twice = opposite_operator(opposite_operator(R));
      for (Element a = 0; a < S.order(); ++a)
        CHECK(twice.images[a] == S.op(S.idem(a), R.images[a]));
      if (S.is_group()) CHECK(twice.images == R.images);
    }
  }
}

TEST_CASE("operator equivalence") {
  auto s3 = load_builtin("S3").carrier;
  RotaBaxterOperator p1{s3, {0, 1, 1, 0, 0, 1}};
  RotaBaxterOperator p2{s3, {0, 2, 2, 0, 0, 2}};
  auto w = equivalent_operators(p1, p2);
  REQUIRE(w.has_value());
  CHECK(*w == ElementMap{0, 2, 1, 4, 3, 5});
  // witness property: psi(R1(a)) = R2(psi(a))
  for (Element a = 0; a < 6; ++a) CHECK((*w)[p1.images[a]] == p2.images[(*w)[a]]);

  RotaBaxterOperator zero{s3, {0, 0, 0, 0, 0, 0}};
  CHECK_FALSE(equivalent_operators(zero, p1).has_value());

  auto z4 = load_builtin("Z/4").carrier;
  RotaBaxterOperator dbl{z4, {0, 2, 0, 2}};
  auto self = equivalent_operators(dbl, dbl);
  REQUIRE(self.has_value());
  CHECK(*self == ElementMap{0, 1, 2, 3});

  auto z2 = load_builtin("Z/2").carrier;
  RotaBaxterOperator other{z2, {0, 0}};
  CHECK_THROWS_AS(equivalent_operators(dbl, other), PreconditionError);
}

TEST_CASE("componentwise gluing on the chain") {
  auto sc = build_strong_semilattice(chain_spec());
  CHECK(glue_componentwise(sc, {{0, 1}, {0, 0}}) == ElementMap{0, 1, 2, 2});

  // compatible pairs succeed and are Rota-Baxter; incompatible ones fail both ways
  const std::vector<ElementMap> z2ops = {{0, 0}, {0, 1}};
  int good = 0;
  for (const auto& top : z2ops)
    for (const auto& bot : z2ops) {
      auto glued = glue_componentwise(sc, {top, bot});
      bool rb = is_rota_baxter(*sc.carrier, glued);
      bool strong = true;
      try {
        auto R = strong_operator_from_components(sc, {top, bot});
        CHECK(R.images == glued);
      } catch (const VerificationError& e) {
        strong = false;
        CHECK(e.code() == "ConditionViolated");
        CHECK(e.witness() == std::vector<int>{0, 1, 1});
      }
      CHECK(rb == strong);
      good += rb;
    }
  CHECK(good == 2);  // (zero,zero) and (id,id)

  auto sc3 = build_strong_semilattice(cs3_spec());
  for (const auto& top : z2ops) {
    auto R = strong_operator_from_components(sc3, {top, {0}});
    CHECK(is_rota_baxter(*sc3.carrier, R.images));
  }
}

TEST_CASE("exact factorizations") {
  auto z6 = load_builtin("Z/6");
  auto facts = find_exact_factorizations(z6.carrier, 12);
  REQUIRE(facts.size() == 4);
  ExactFactorization expect;
  expect.u_members = {0, 2, 4};
  expect.v_members = {0, 3};
  bool found = false;
  for (const auto& f : facts) {
    CHECK(f.u_members[0] == 0);  // identity is in both parts
    CHECK(f.v_members[0] == 0);
    // uniqueness of the decomposition, recovered from parts
    std::set<std::pair<Element, Element>> seen;
    for (Element a = 0; a < 6; ++a) {
      auto [u, v] = f.parts[a];
      CHECK(z6.carrier->op(u, v) == a);
      seen.insert({u, v});
    }
    CHECK(seen.size() == 6);
    if (f.u_members == expect.u_members && f.v_members == expect.v_members) {
      found = true;
      auto [R, T] = rb_from_exact_factorization(z6.carrier, f);
      CHECK(R.images == ElementMap{0, 3, 0, 3, 0, 3});
      CHECK(R.images[5] == 3);  // 5 = 2 + 3, so R(5) = -3 = 3
      CHECK(T.images == R.images);  // group case: u_a0 = 0
    }
  }
  CHECK(found);

  CHECK(find_exact_factorizations(load_builtin("Z/4").carrier, 12).size() == 2);
  CHECK(find_exact_factorizations(load_builtin("CS3").carrier, 12).size() == 2);

  auto s3 = load_builtin("S3");
  auto fs3 = find_exact_factorizations(s3.carrier, 12);
  CHECK(fs3.size() == 8);
  for (const auto& f : fs3) {
    auto [R, T] = rb_from_exact_factorization(s3.carrier, f);
    CHECK(is_rota_baxter(*s3.carrier, R.images));
    CHECK(is_rota_baxter(*s3.carrier, T.images));
    // the two parts intersect exactly in the identity
    std::vector<Element> common;
    for (Element u : f.u_members)
      for (Element v : f.v_members)
        if (u == v) common.push_back(u);
    CHECK(common == std::vector<Element>{0});
  }

  // non-monoid: 3-element semilattice antichain {bottom, p, q}
  auto anti = verify_clifford_shared(
      CayleyTable::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  try {
    find_exact_factorizations(anti, 12);
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "NotAMonoid");
  }

  std::vector<std::vector<Element>> rows(13, std::vector<Element>(13));
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b) rows[a][b] = (a + b) % 13;
  CHECK_THROWS_AS(
      find_exact_factorizations(verify_clifford_shared(CayleyTable::from_rows(rows)), 12),
      CarrierTooLarge);
}

TEST_CASE("commutative rota-baxter endomorphisms on semilattices of groups") {
  auto sc3 = build_strong_semilattice(cs3_spec());
  auto ce = commutative_rb_endomorphisms(sc3);
  CHECK(oracle::images_of(ce) == oracle::commutative_rb_endos_raw(sc3.carrier->table()));
  CHECK(oracle::images_of(ce) ==
        std::vector<ElementMap>{{0, 0, 0}, {0, 0, 2}, {0, 1, 2}});

  auto sch = build_strong_semilattice(chain_spec());
  auto ce2 = commutative_rb_endomorphisms(sch);
  CHECK(oracle::images_of(ce2) == oracle::commutative_rb_endos_raw(sch.carrier->table()));
  CHECK(ce2.size() == 4);

  // single-vertex spec reduces to the plain group case
  StrongSemilatticeSpec one;
  one.meet = CayleyTable::from_rows({{0}});
  one.groups = {load_builtin("Z/4").carrier->table()};
  auto sc1 = build_strong_semilattice(one);
  CHECK(oracle::images_of(commutative_rb_endomorphisms(sc1)) ==
        std::vector<ElementMap>{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}});
}

TEST_CASE("idempotent rota-baxter endomorphisms on groups") {
  auto s3 = load_builtin("S3");
  auto ops = idempotent_rb_endomorphisms(s3.carrier);
  CHECK(oracle::images_of(ops) == std::vector<ElementMap>{{0, 0, 0, 0, 0, 0},
                                                          {0, 1, 1, 0, 0, 1},
                                                          {0, 2, 2, 0, 0, 2},
                                                          {0, 5, 5, 0, 0, 5}});
  CHECK(oracle::images_of(ops) == oracle::idempotent_rb_endos_raw(s3.carrier->table()));

  auto z4 = load_builtin("Z/4");
  CHECK(oracle::images_of(idempotent_rb_endomorphisms(z4.carrier)) ==
        std::vector<ElementMap>{{0, 0, 0, 0}, {0, 1, 2, 3}});

  try {
    idempotent_rb_endomorphisms(load_builtin("CS3").carrier);
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "NotAGroup");
  }
}

TEST_CASE("structural identities of verified operators") {
  // R(a) = R(a) + R(a0);  a = a + R(a0);  -R(a) = R(-R(a) - a + R(a));
  // R(a0) = R(a)0;  the image is closed under products and inverses.
  for (const char* name : {"Z/2", "Z/3", "Z/4", "V4", "Z/6", "S3", "CS3", "SL2", "CHAIN-Z2Z2"}) {
    auto e = load_builtin(name);
    auto& S = *e.carrier;
    for (const auto& op : enumerate_rota_baxter(e.carrier, {8})) {
      const auto& R = op.images;
      for (Element a = 0; a < S.order(); ++a) {
        CHECK(R[a] == S.op(R[a], R[S.idem(a)]));
        CHECK(a == S.op(a, R[S.idem(a)]));
        Element m = S.op(S.op(S.inverse(R[a]), S.inverse(a)), R[a]);
        CHECK(S.inverse(R[a]) == R[m]);
        CHECK(R[S.idem(a)] == S.idem(R[a]));
        for (Element b = 0; b < S.order(); ++b) {
          Element pr = S.op(R[a], R[b]);
          bool in_image = false;
          for (Element x = 0; x < S.order(); ++x) in_image |= (R[x] == pr);
          CHECK(in_image);
        }
        bool inv_in_image = false;
        for (Element x = 0; x < S.order(); ++x) inv_in_image |= (R[x] == S.inverse(R[a]));
        CHECK(inv_in_image);
      }
    }
  }
}
