#include <doctest.h>

#include "helpers.hpp"
#include "wq/dimension.hpp"
#include "wq/word.hpp"

using namespace wq;

TEST_CASE("dimension values match the bundled claims") {
  CHECK(dimension(test::fx("t4").file.table, test::fx("t4").file.ctx).value ==
        2);
  CHECK(dimension(test::fx("table1").file.table, test::fx("table1").file.ctx)
            .value == 3);
  CHECK(dimension(test::fx("table2").file.table, test::fx("table2").file.ctx)
            .value == 3);
  for (const char* id :
       {"table3_5", "table6", "table7", "table8", "table9", "table10"})
    CHECK(dimension(test::fx(id).file.table, test::fx(id).file.ctx).value == 4);
}

TEST_CASE("witnesses") {
  auto t4 = test::fx("t4");
  DimensionReport r4 = dimension(t4.file.table, t4.file.ctx);
  CHECK(r4.witness.render() == "(f g)");
  auto t1 = test::fx("table1");
  DimensionReport r1 = dimension(t1.file.table, t1.file.ctx);
  CHECK(r1.witness.render() == "((f g) f)");
}

TEST_CASE("witnesses re-evaluate to e and have witness length = value") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    auto rec = test::fx(id);
    DimensionReport rep = dimension(rec.file.table, rec.file.ctx);
    CHECK(rep.witness.length() == rep.value);
    CHECK(evaluate(rep.witness, rec.file.table, rec.file.ctx) ==
          rec.file.ctx.e);
    CHECK(rep.value >= 2);
  }
}

TEST_CASE("all ordered pairs of the order-4 table have dimension 2") {
  AllPairsReport rep = dimension_all_pairs(test::fx("t4").file.table);
  CHECK(rep.pairs.size() == 12);
  CHECK(rep.uniform);
  CHECK(rep.min == 2);
  CHECK(rep.max == 2);
}

TEST_CASE("all 110 ordered pairs of the order-11 table agree (an empirical "
          "finding)") {
  AllPairsReport rep = dimension_all_pairs(test::fx("table2").file.table);
  CHECK(rep.pairs.size() == 110);
  CHECK(rep.min == 3);
  CHECK(rep.max == 3);
  CHECK(rep.uniform);
}

TEST_CASE("rejected inputs") {
  CayleyTable one(1, {0});
  CHECK_THROWS_AS(dimension_all_pairs(one), std::invalid_argument);
  // not one-step: the left projection
  CHECK_THROWS_AS(dimension_all_pairs(test::left_projection(3)),
                  std::invalid_argument);
  // a table not generated by {f, ef}: commutative projection blows the cap
  CayleyTable proj = test::left_projection(3);
  CHECK_THROWS_AS(dimension(proj, GeneratorContext::with(proj, 0, 1)),
                  std::runtime_error);
}
