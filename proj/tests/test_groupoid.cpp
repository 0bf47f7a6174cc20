#include <doctest.h>

#include "helpers.hpp"
#include "wq/groupoid.hpp"
#include "wq/oracle.hpp"

using namespace wq;

TEST_CASE("battery passes on the order-4 table and on a singleton") {
  CHECK(check_identities(test::fx("t4").file.table).all_ok());
  CayleyTable one(1, {0});
  CHECK(check_identities(one).all_ok());
}

TEST_CASE("left projection: idempotent but not right modular, not latin") {
  CayleyTable t = test::left_projection(2);
  IdentityReport rep = check_identities(t);
  CHECK(rep.idempotent.ok);
  CHECK(!rep.right_modular.ok);
  // first counterexample in lexicographic order has x != z
  CHECK(rep.right_modular.arity == 3);
  CHECK(rep.right_modular.witness == std::array<int, 4>{0, 0, 1, 0});
  CHECK(!rep.latin_square.ok);
  // 0*1 = 0 != 1 = 1*0, so nowhere-commutativity holds vacuously
  CHECK(rep.nowhere_commutative.ok);
}

TEST_CASE("count_rm_violations") {
  // valid tables have none
  for (const char* id : {"t4", "table1", "table3_5"})
    CHECK(count_rm_violations(test::fx(id).file.table) == 0);
  // left projection on 2 elements: exactly the 4 triples with x != z
  CHECK(count_rm_violations(test::left_projection(2)) == 4);
  // swapping the (0,1) and (1,0) entries of the order-4 table breaks it
  CayleyTable t4 = test::fx("t4").file.table;
  std::vector<int> cells = t4.cells();
  std::swap(cells[0 * 4 + 1], cells[1 * 4 + 0]);
  CHECK(count_rm_violations(CayleyTable(4, std::move(cells))) > 0);
}

TEST_CASE("generated sets") {
  auto t4 = test::fx("t4");
  CHECK(generated_set(t4.file.table, {t4.file.ctx.e}) ==
        std::vector<int>{t4.file.ctx.e});
  CHECK(generated_set(t4.file.table, {t4.file.ctx.e, t4.file.ctx.f}).size() ==
        4);
  auto big = test::fx("table3_5");
  CHECK(generated_set(big.file.table, {3, 17}).size() == 29);
}

TEST_CASE("one-step holds on the generated tables, fails on products") {
  CHECK(is_one_step(test::fx("t4").file.table).ok);
  CayleyTable one(1, {0});
  OneStepResult r1 = is_one_step(one);
  CHECK(!r1.ok);
  CHECK(r1.everywhere_commutative);

  CayleyTable prod =
      test::direct_product(test::fx("t4").file.table, test::fx("t4").file.table);
  OneStepResult rp = is_one_step(prod);
  CHECK(!rp.ok);
  CHECK(!rp.everywhere_commutative);
  REQUIRE(rp.failing_pair.has_value());
  // the witness pair's closure stays inside a proper subtable
  auto closure = generated_set(prod, {rp.failing_pair->first,
                                      rp.failing_pair->second});
  CHECK(closure.size() < 16);
}

TEST_CASE("division on latin tables") {
  auto t4 = test::fx("t4");
  const CayleyTable& t = t4.file.table;
  int e = t4.file.ctx.e, f = t4.file.ctx.f;
  Division d = divide(t, e, f);
  REQUIRE(d.right.kind == Solution::Kind::unique);
  REQUIRE(d.left.kind == Solution::Kind::unique);
  CHECK(d.right.value == t4.file.ctx.h);  // e * fe = f
  CHECK(d.left.value == t4.file.ctx.g);   // ef * e = f
  CHECK(t.at(e, d.right.value) == f);
  CHECK(t.at(d.left.value, e) == f);

  // x = y: idempotency makes both solutions x itself
  Division dd = divide(t, 2, 2);
  CHECK(dd.right.value == 2);
  CHECK(dd.left.value == 2);

  // fef * f = e in the order-5 table
  auto t1 = test::fx("table1");
  Division d1 = divide(t1.file.table, 4, 0);
  CHECK(d1.right.kind == Solution::Kind::unique);
  CHECK(d1.right.value == 1);
}

TEST_CASE("division reports absence and ambiguity off latin tables") {
  CayleyTable t = test::left_projection(2);
  Division d = divide(t, 0, 1);  // 0*y = 1 never; x*0 = 1 only for x = 1
  CHECK(d.right.kind == Solution::Kind::absent);
  CHECK(d.left.kind == Solution::Kind::unique);
  Division d2 = divide(t, 0, 0);  // 0*y = 0 for both y
  CHECK(d2.right.kind == Solution::Kind::ambiguous);
}

TEST_CASE("idempotent right-modular models of order <= 4 satisfy the derived "
          "identities") {
  for (int order = 1; order <= 4; ++order) {
    SearchSpec spec;
    spec.order = order;
    spec.idempotent = spec.right_modular = true;
    for (const CayleyTable& t : brute_force_models(spec)) {
      IdentityReport rep = check_identities(t);
      CHECK(rep.medial.ok);
      CHECK(rep.left_distributive.ok);
      CHECK(rep.right_distributive.ok);
      CHECK(rep.elastic.ok);
    }
  }
}
