#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "wq/dimension.hpp"
#include "wq/groupoid.hpp"
#include "wq/word.hpp"

using namespace wq;

TEST_CASE("bundle is complete and ids are stable") {
  CHECK(fixture_ids() ==
        std::vector<std::string>{"t4", "table1", "table2", "table3_5",
                                 "table6", "table7", "table8", "table9",
                                 "table10"});
  CHECK(is_fixture_id("t4"));
  CHECK(!is_fixture_id("table11"));
  CHECK_THROWS_AS(load_fixture("table11"), std::invalid_argument);
}

TEST_CASE("asset checksums are pinned") {
  const std::map<std::string, std::uint64_t> expected = {
      {"t4", 0x34ce8e3fbae28f17ull},      {"table1", 0x92a6dcceadf277daull},
      {"table2", 0x55ecc90a622ffe6cull},  {"table3_5", 0x4b4078279d51d05bull},
      {"table6", 0x2692a47988a75f21ull},  {"table7", 0xa72d909942ebefdaull},
      {"table8", 0xcacdf01aeeb802e2ull},  {"table9", 0x813fa3004c7e2acdull},
      {"table10", 0x3a7e54ad2764e439ull},
  };
  for (const auto& [id, sum] : expected) CHECK(fixture_checksum(id) == sum);
}

TEST_CASE("orders and generator designations") {
  const std::map<std::string, int> orders = {
      {"t4", 4},      {"table1", 5},  {"table2", 11},
      {"table3_5", 29}, {"table6", 16}, {"table7", 9},
      {"table8", 11}, {"table9", 19}, {"table10", 19}};
  for (const auto& [id, n] : orders) {
    auto rec = test::fx(id);
    CHECK(rec.file.table.order() == n);
    CHECK(rec.claimed_order == n);
    CHECK(rec.file.table.label(rec.file.ctx.e) == "e");
  }
  // two fixtures designate f away from index 1
  CHECK(test::fx("table2").file.ctx.f == 10);   // f = e.efe
  CHECK(test::fx("table6").file.ctx.f == 15);   // f = e(e.ef)
  CHECK(test::fx("t4").file.ctx.f == 1);
}

TEST_CASE("identity battery on every fixture") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    IdentityReport rep = check_identities(test::fx(id).file.table);
    CHECK(rep.idempotent.ok);
    CHECK(rep.right_modular.ok);
    CHECK(rep.medial.ok);
    CHECK(rep.left_distributive.ok);
    CHECK(rep.right_distributive.ok);
    CHECK(rep.elastic.ok);
    CHECK(rep.latin_square.ok);
    CHECK(rep.nowhere_commutative.ok);
  }
}

TEST_CASE("one-step: eight fixtures pass; table6 provably does not") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    if (id == "table6") continue;
    CHECK(is_one_step(test::fx(id).file.table).ok);
  }
  // The published order-16 table contains proper noncommutative
  // subgroupoids: {e, fef, ef.fe, e.fef} is closed and is a copy of the
  // order-4 table, so pair generation fails.  This is checkable from the
  // table alone and is pinned here as the computed truth.
  auto t6 = test::fx("table6");
  OneStepResult os = is_one_step(t6.file.table);
  CHECK(!os.ok);
  CHECK(!os.everywhere_commutative);
  REQUIRE(os.failing_pair.has_value());
  // e = 0, fef = 3: their closure is a 4-element subalgebra
  auto sub = generated_set(t6.file.table, {0, 3});
  CHECK(sub == std::vector<int>{0, 3, 7, 12});
  // and that subalgebra is noncommutative
  CHECK(t6.file.table.at(0, 3) != t6.file.table.at(3, 0));
}

TEST_CASE("every fixture satisfies its defining relation") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    auto rec = test::fx(id);
    REQUIRE(rec.file.relation.has_value());
    CHECK(evaluate(*rec.file.relation, rec.file.table, rec.file.ctx) ==
          rec.file.ctx.e);
  }
}

TEST_CASE("derived generator equations hold on every fixture") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    auto rec = test::fx(id);
    const CayleyTable& t = rec.file.table;
    const GeneratorContext& c = rec.file.ctx;
    CHECK(c.g != c.h);                      // ef != fe
    CHECK(t.at(c.g, c.f) == c.h);           // h = gf
    CHECK(t.at(c.h, c.e) == c.g);           // g = he
    CHECK(t.at(c.g, c.e) == t.at(c.e, c.h));  // ge = eh
    CHECK(t.at(c.h, c.f) == t.at(c.f, c.g));  // hf = fg
    // ef.fe != fe.ef
    CHECK(t.at(c.g, c.h) != t.at(c.h, c.g));
  }
}

TEST_CASE("the derived pair {ef, fe} generates every fixture") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    auto rec = test::fx(id);
    CHECK(static_cast<int>(
              generated_set(rec.file.table, {rec.file.ctx.g, rec.file.ctx.h})
                  .size()) == rec.file.table.order());
  }
}

TEST_CASE("singletons generate themselves; pairs generate everything except "
          "on table6") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    const CayleyTable& t = test::fx(id).file.table;
    for (int x = 0; x < t.order(); ++x)
      CHECK(generated_set(t, {x}) == std::vector<int>{x});
    if (id == "table6") continue;  // 48 of 240 pairs fail there (see above)
    for (int x = 0; x < t.order(); ++x)
      for (int y = 0; y < t.order(); ++y)
        if (x != y)
          CHECK(static_cast<int>(generated_set(t, {x, y}).size()) ==
                t.order());
  }
}

TEST_CASE("rows and columns are onto") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    const CayleyTable& t = test::fx(id).file.table;
    const int n = t.order();
    for (int x = 0; x < n; ++x) {
      std::vector<char> row(n, 0), col(n, 0);
      for (int y = 0; y < n; ++y) {
        row[t.at(x, y)] = 1;
        col[t.at(y, x)] = 1;
      }
      CHECK(std::count(row.begin(), row.end(), 1) == n);
      CHECK(std::count(col.begin(), col.end(), 1) == n);
    }
  }
}

TEST_CASE("claimed dimensions are reproduced") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    auto rec = test::fx(id);
    DimensionReport rep = dimension(rec.file.table, rec.file.ctx);
    CHECK(rep.value == rec.claimed_dimension);
  }
}
