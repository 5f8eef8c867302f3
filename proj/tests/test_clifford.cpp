#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rotabrace/catalog.hpp"
#include "rotabrace/clifford.hpp"
#include "rotabrace/errors.hpp"

using namespace rotabrace;

namespace {

CayleyTable z2() { return CayleyTable::from_rows({{0, 1}, {1, 0}}); }
CayleyTable sl2() { return CayleyTable::from_rows({{0, 1}, {1, 1}}); }
CayleyTable cs3() { return CayleyTable::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}); }

// Five-element Brandt semigroup: 0, e11, e22, e12, e21.  Inverse but not
// Clifford (idempotents are not central).
CayleyTable brandt() {
  return CayleyTable::from_rows({{0, 0, 0, 0, 0},
                                 {0, 1, 0, 3, 0},
                                 {0, 0, 2, 0, 4},
                                 {0, 0, 3, 0, 1},
                                 {0, 4, 0, 2, 0}});
}

StrongSemilatticeSpec chain_spec() {
  StrongSemilatticeSpec s;
  s.meet = sl2();
  s.groups = {z2(), z2()};
  s.links = {{0, 1, {0, 1}}};
  return s;
}

}  // namespace

TEST_CASE("cayley table shape") {
  auto t = cs3();
  CHECK(t.order == 3);
  CHECK(t.at(1, 1) == 0);
  CHECK(t.rows() == std::vector<std::vector<Element>>{{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
  CHECK(t == cs3());
  CHECK_THROWS_AS(CayleyTable::from_rows({{0, 1}, {0}}), ParseError);
  CHECK_THROWS_AS(CayleyTable::from_rows({}), ParseError);
}

TEST_CASE("clifford verdicts on valid carriers") {
  for (const char* name : {"Z/2", "Z/3", "Z/4", "V4", "Z/6", "S3", "CS3", "SL2"}) {
    auto e = load_builtin(name);
    CHECK(check_clifford(e.carrier->table()).ok);
  }
}

TEST_CASE("clifford defect witnesses") {
  auto oor = check_clifford(CayleyTable::from_rows({{0, 2}, {1, 0}}));
  CHECK_FALSE(oor.ok);
  CHECK(oor.defect == CliffordDefect::EntryOutOfRange);
  CHECK(oor.witness[0] == 0);
  CHECK(oor.witness[1] == 1);

  auto assoc = check_clifford(CayleyTable::from_rows({{0, 1}, {0, 0}}));
  CHECK_FALSE(assoc.ok);
  CHECK(assoc.defect == CliffordDefect::NotAssociative);
  CHECK(assoc.witness[0] == 1);
  CHECK(assoc.witness[1] == 0);
  CHECK(assoc.witness[2] == 1);

  // left-zero band: every element inverts every other
  auto nonuniq = check_clifford(CayleyTable::from_rows({{0, 0}, {1, 1}}));
  CHECK_FALSE(nonuniq.ok);
  CHECK(nonuniq.defect == CliffordDefect::NonUniqueInverse);
  CHECK(nonuniq.witness[0] == 0);
  CHECK(nonuniq.witness[1] == 0);
  CHECK(nonuniq.witness[2] == 1);

  auto noinv = check_clifford(CayleyTable::from_rows({{0, 0}, {0, 0}}));
  CHECK_FALSE(noinv.ok);
  CHECK(noinv.defect == CliffordDefect::NoInverse);
  CHECK(noinv.witness[0] == 1);

  auto br = check_clifford(brandt());
  CHECK_FALSE(br.ok);
  CHECK(br.defect == CliffordDefect::NotClifford);
  CHECK(br.witness[0] == 3);
  CHECK(br.describe() == "NotClifford at (3)");
}

TEST_CASE("verify_clifford throws coded errors") {
  CHECK_NOTHROW(verify_clifford(cs3()));
  try {
    verify_clifford(brandt());
    CHECK(false);
  } catch (const VerificationError& e) {
    CHECK(e.code() == "NotClifford");
    CHECK(e.witness() == std::vector<int>{3});
  }
  try {
    verify_clifford(CayleyTable::from_rows({{0, 0}, {1, 1}}));
    CHECK(false);
  } catch (const VerificationError& e) {
    CHECK(e.code() == "NonUniqueInverse");
  }
}

TEST_CASE("carrier accessors") {
  auto S = verify_clifford(cs3());
  CHECK(S.order() == 3);
  CHECK(S.inverses() == std::vector<Element>{0, 1, 2});
  CHECK(S.idem_parts() == std::vector<Element>{0, 0, 2});
  CHECK(S.idempotents() == std::vector<Element>{0, 2});
  CHECK_FALSE(S.is_group());
  CHECK(S.identity() == 0);
  CHECK(S.is_idempotent(2));
  CHECK_FALSE(S.is_idempotent(1));

  auto z6 = load_builtin("Z/6");
  CHECK(z6.carrier->is_group());
  CHECK(z6.carrier->identity() == 0);
  CHECK(z6.carrier->inverse(1) == 5);
  CHECK(z6.carrier->idem(4) == 0);

  // SL2 is a monoid (top idempotent is the identity), CHAIN-Z2Z2 is too
  CHECK(load_builtin("SL2").carrier->identity() == 0);
  CHECK(load_builtin("CHAIN-Z2Z2").carrier->identity() == 0);
}

TEST_CASE("strong semilattice build") {
  auto sc = build_strong_semilattice(chain_spec());
  CHECK(sc.carrier->order() == 4);
  CHECK(sc.carrier->table().rows() ==
        std::vector<std::vector<Element>>{
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 2, 3}, {3, 2, 3, 2}});
  CHECK(sc.vertex_of == std::vector<Element>{0, 0, 1, 1});
  CHECK(sc.local_of == std::vector<Element>{0, 1, 0, 1});
  CHECK(sc.global(1, 1) == 3);

  // single vertex: the build returns the group itself
  StrongSemilatticeSpec one;
  one.meet = CayleyTable::from_rows({{0}});
  one.groups = {z2()};
  auto sc1 = build_strong_semilattice(one);
  CHECK(sc1.carrier->table() == z2());
}

TEST_CASE("spec validation rejects malformed specs") {
  auto expect_fail = [](StrongSemilatticeSpec s, const std::string& needle) {
    try {
      validate_spec(s);
      CHECK_MESSAGE(false, "expected rejection: " << needle);
    } catch (const VerificationError& e) {
      CHECK(e.code() == "SpecInvariantViolated");
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    }
  };
  CHECK_NOTHROW(validate_spec(chain_spec()));

  auto up = chain_spec();
  up.links = {{1, 0, {0, 1}}};
  expect_fail(up, "descend");

  auto nohom = chain_spec();
  nohom.links = {{0, 1, {1, 0}}};
  expect_fail(nohom, "homomorphism");

  auto missing = chain_spec();
  missing.links = {};
  expect_fail(missing, "missing link");

  auto dup = chain_spec();
  dup.links = {{0, 1, {0, 1}}, {0, 1, {0, 0}}};
  expect_fail(dup, "duplicate");

  auto badmeet = chain_spec();
  badmeet.meet = z2();
  expect_fail(badmeet, "idempotent");

  auto notgroup = chain_spec();
  notgroup.groups = {sl2(), z2()};
  expect_fail(notgroup, "not a group");

  auto selfbad = chain_spec();
  selfbad.links = {{0, 0, {0, 0}}, {0, 1, {0, 1}}};
  expect_fail(selfbad, "identity link");

  auto wronglen = chain_spec();
  wronglen.links = {{0, 1, {0}}};
  expect_fail(wronglen, "wrong length");

  // 3-chain whose long link disagrees with the two short ones
  StrongSemilatticeSpec comp;
  comp.meet = CayleyTable::from_rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  comp.groups = {z2(), z2(), z2()};
  comp.links = {{0, 1, {0, 1}}, {1, 2, {0, 1}}, {0, 2, {0, 0}}};
  expect_fail(comp, "compose");
}

TEST_CASE("decomposition of CS3") {
  auto S = verify_clifford(cs3());
  auto d = decompose_to_strong_semilattice(S);
  CHECK(d.spec.meet.rows() == std::vector<std::vector<Element>>{{0, 1}, {1, 1}});
  CHECK(d.spec.groups.size() == 2);
  CHECK(d.spec.groups[0] == z2());
  CHECK(d.spec.groups[1] == CayleyTable::from_rows({{0}}));
  REQUIRE(d.spec.links.size() == 1);
  CHECK(d.spec.links[0].from == 0);
  CHECK(d.spec.links[0].to == 1);
  CHECK(d.spec.links[0].images == std::vector<Element>{0, 0});
  CHECK(d.element_of == std::vector<Element>{0, 1, 2});
  CHECK(d.vertex_of == std::vector<Element>{0, 0, 1});
  CHECK(d.local_of == std::vector<Element>{0, 1, 0});
}

TEST_CASE("decompose/build round trip") {
  // element_of is an isomorphism from the rebuilt carrier onto the original
  for (const char* name : {"Z/4", "Z/6", "S3", "CS3", "SL2", "CHAIN-Z2Z2"}) {
    auto S = load_builtin(name).carrier;
    auto d = decompose_to_strong_semilattice(*S);
    auto sc = build_strong_semilattice(d.spec);
    REQUIRE(sc.carrier->order() == S->order());
    for (Element p = 0; p < S->order(); ++p)
      for (Element q = 0; q < S->order(); ++q)
        CHECK(d.element_of[sc.carrier->op(p, q)] == S->op(d.element_of[p], d.element_of[q]));
  }
  // a copy of CS3 whose absorbing zero sits at index 0
  auto S = verify_clifford(CayleyTable::from_rows({{0, 0, 0}, {0, 2, 1}, {0, 1, 2}}));
  auto d = decompose_to_strong_semilattice(S);
  CHECK(d.vertex_of == std::vector<Element>{0, 1, 1});
  auto sc = build_strong_semilattice(d.spec);
  for (Element p = 0; p < 3; ++p)
    for (Element q = 0; q < 3; ++q)
      CHECK(d.element_of[sc.carrier->op(p, q)] == S.op(d.element_of[p], d.element_of[q]));
}

TEST_CASE("homomorphism enumeration matches the raw filter") {
  auto z2c = load_builtin("Z/2"), z4c = load_builtin("Z/4"), s3c = load_builtin("S3"),
       cs3c = load_builtin("CS3");

  auto h = enumerate_homomorphisms(*z2c.carrier, *z4c.carrier, HomKind::All);
  CHECK(h == std::vector<ElementMap>{{0, 0}, {0, 2}});
  CHECK(h == oracle::homs_raw(z2c.carrier->table(), z4c.carrier->table(), false));

  auto endos4 = enumerate_homomorphisms(*z4c.carrier, *z4c.carrier, HomKind::All);
  CHECK(endos4.size() == 4);
  CHECK(endos4 == oracle::homs_raw(z4c.carrier->table(), z4c.carrier->table(), false));

  auto endos_s3 = enumerate_homomorphisms(*s3c.carrier, *s3c.carrier, HomKind::All);
  CHECK(endos_s3.size() == 10);
  CHECK(endos_s3 == oracle::homs_raw(s3c.carrier->table(), s3c.carrier->table(), false));

  auto autos_s3 = enumerate_homomorphisms(*s3c.carrier, *s3c.carrier, HomKind::Isomorphisms);
  CHECK(autos_s3.size() == 6);
  CHECK(autos_s3 == oracle::homs_raw(s3c.carrier->table(), s3c.carrier->table(), true));
  for (const auto& f : autos_s3) CHECK(is_homomorphism(*s3c.carrier, *s3c.carrier, f));

  auto endos_cs3 = enumerate_homomorphisms(*cs3c.carrier, *cs3c.carrier, HomKind::All);
  CHECK(endos_cs3 ==
        std::vector<ElementMap>{{0, 0, 0}, {0, 0, 2}, {0, 1, 2}, {2, 2, 2}});

  CHECK_FALSE(is_homomorphism(*s3c.carrier, *s3c.carrier, ElementMap{0, 0, 0, 0, 0, 1}));
}

TEST_CASE("normal subsets") {
  auto s3 = load_builtin("S3").carrier;
  CHECK(is_normal_subset(*s3, {0}).ok);
  CHECK(is_normal_subset(*s3, {0, 3, 4}).ok);
  CHECK(is_normal_subset(*s3, {0, 1, 2, 3, 4, 5}).ok);

  auto v = is_normal_subset(*s3, {0, 1});
  CHECK_FALSE(v.ok);
  CHECK(v.condition == 4);  // 2*3 = 1 lands inside, 3*2 = 5 does not
  CHECK(v.witness[0] == 2);
  CHECK(v.witness[1] == 3);

  auto cs3c = load_builtin("CS3").carrier;
  CHECK(is_normal_subset(*cs3c, {0, 2}).ok);
  CHECK(is_normal_subset(*cs3c, {0, 1, 2}).ok);
  auto w = is_normal_subset(*cs3c, {2});
  CHECK_FALSE(w.ok);
  CHECK(w.condition == 1);  // idempotent 0 missing

  try {
    is_normal_subset(*cs3c, {0, 7});
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "SubsetOutOfRange");
  }
}
