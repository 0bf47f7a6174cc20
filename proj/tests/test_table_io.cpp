#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "wq/table_io.hpp"

using namespace wq;

namespace {

const char* kTable1Text =
    "# wqt v1\n"
    "order: 5\n"
    "labels: e f ef fe fef\n"
    "e: 0\n"
    "f: 1\n"
    "relation: ((f g) f)\n"
    "table:\n"
    "0 2 1 4 3\n"
    "3 1 4 0 2\n"
    "4 3 2 1 0\n"
    "2 4 0 3 1\n"
    "1 0 3 2 4\n";

}  // namespace

TEST_CASE("reads the documented format byte for byte") {
  std::istringstream in(kTable1Text);
  TableFile tf = read_table(in);
  CHECK(tf.table.order() == 5);
  CHECK(tf.table.label(4) == "fef");
  CHECK(tf.ctx.e == 0);
  CHECK(tf.ctx.f == 1);
  CHECK(tf.ctx.g == 2);  // e*f
  CHECK(tf.ctx.h == 3);  // f*e
  REQUIRE(tf.relation.has_value());
  CHECK(tf.relation->render() == "((f g) f)");
  CHECK(tf.table.at(4, 1) == 0);  // fef*f = e

  // writing reproduces the exact bytes
  CHECK(table_to_text(tf) == kTable1Text);

  // and it matches the bundled asset
  CHECK(tf.table == test::fx("table1").file.table);
}

TEST_CASE("text round-trip is identity") {
  for (const auto& id : fixture_ids()) {
    TableFile tf = test::fx(id).file;
    std::string text = table_to_text(tf);
    std::istringstream in(text);
    TableFile back = read_table(in);
    CHECK(back.table == tf.table);
    CHECK(back.table.labels() == tf.table.labels());
    CHECK(back.ctx.e == tf.ctx.e);
    CHECK(back.ctx.f == tf.ctx.f);
    CHECK(table_to_text(back) == text);
  }
}

TEST_CASE("json mirror round-trips") {
  TableFile tf = test::fx("table9").file;
  std::string js = table_to_json(tf);
  std::istringstream in(js);
  TableFile back = read_table(in);
  CHECK(back.table == tf.table);
  CHECK(back.ctx.e == tf.ctx.e);
  CHECK(back.relation->render() == tf.relation->render());
  CHECK(table_to_json(back) == js);
}

TEST_CASE("format errors") {
  auto bad = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_table(in), TableFormatError);
  };
  bad("order: 2\ne: 0\nf: 1\ntable:\n0 1\n");          // missing row
  bad("order: 2\ne: 0\nf: 1\ntable:\n0 1\n1 0 0\n");   // ragged row
  bad("e: 0\nf: 1\ntable:\n0\n");                      // missing order
  bad("order: 1\nf: 0\ntable:\n0\n");                  // missing e
  bad("order: 2\nsize: 2\ne: 0\nf: 1\ntable:\n0 1\n1 0\n");  // unknown key
  bad("order: 2\ne: 0\nf: 1\ntable:\n0 3\n1 0\n");     // entry out of range
  bad("order: 2\ne: 0\nf: 0\ntable:\n0 1\n1 0\n");     // e = f
  bad("order: 2\nlabels: a a\ne: 0\nf: 1\ntable:\n0 1\n1 0\n");  // dup label

  CHECK_THROWS_AS(read_table_file("/nonexistent/path.wqt"), TableFormatError);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# leading comment\n\norder: 2\ne: 0\nf: 1\n# mid comment\ntable:\n"
      "0 1\n\n1 0\n");
  TableFile tf = read_table(in);
  CHECK(tf.table.order() == 2);
  CHECK(!tf.had_labels);
  CHECK(tf.table.label(1) == "1");  // generated labels
}
