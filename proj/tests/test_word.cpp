#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wq/groupoid.hpp"
#include "wq/word.hpp"

using namespace wq;

TEST_CASE("parse single letters") {
  Word f = Word::parse("f");
  CHECK(f.is_leaf());
  CHECK(f.letter() == Letter::F);
  CHECK(f.length() == 1);
  Word g = Word::parse("g");
  CHECK(g.letter() == Letter::G);
}

TEST_CASE("parse nested pairs") {
  Word w = Word::parse("((f g) f)");
  CHECK(w.length() == 3);
  CHECK(!w.is_leaf());
  CHECK(w.left().length() == 2);
  CHECK(w.right().letter() == Letter::F);
  CHECK(w.render() == "((f g) f)");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Word::parse("(f"), WordSyntaxError);
  try {
    Word::parse("(f");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position() == 2);  // end of input
  }
  CHECK_THROWS_AS(Word::parse("x"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("(f g) f"), WordSyntaxError);  // trailing input
  CHECK_THROWS_AS(Word::parse("(fg)"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse(""), WordSyntaxError);
}

TEST_CASE("render and parse are inverse on all words up to length 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const Word& w : enumerate_words(n)) {
      std::string r = w.render();
      CHECK(seen.insert(r).second);  // renderings are distinct
      CHECK(Word::parse(r) == w);
      CHECK(w.length() == n);
    }
  }
}

TEST_CASE("enumeration counts are 2^n * Catalan(n-1)") {
  // Catalan: 1, 1, 2, 5, 14, 42
  CHECK(enumerate_words(1).size() == 2);
  CHECK(enumerate_words(2).size() == 4);
  CHECK(enumerate_words(3).size() == 16);
  CHECK(enumerate_words(4).size() == 80);  // 5 bracketings of four factors
  CHECK(enumerate_words(5).size() == 448);
  CHECK(enumerate_words(6).size() == 2688);
  CHECK_THROWS_AS(enumerate_words(0), std::invalid_argument);
}

TEST_CASE("evaluate on bundled tables") {
  auto t4 = test::fx("t4");
  // f * ef = e in the order-4 table
  CHECK(evaluate(Word::parse("(f g)"), t4.file.table, t4.file.ctx) ==
        t4.file.ctx.e);
  // the letter g alone is the element e*f
  CHECK(evaluate(Word::parse("g"), t4.file.table, t4.file.ctx) ==
        t4.file.ctx.g);
  auto t1 = test::fx("table1");
  // fef*f = e in the order-5 table
  CHECK(evaluate(Word::parse("((f g) f)"), t1.file.table, t1.file.ctx) ==
        t1.file.ctx.e);
}

TEST_CASE("evaluate is a homomorphic fold") {
  for (const char* id : {"t4", "table1", "table2"}) {
    auto rec = test::fx(id);
    const CayleyTable& t = rec.file.table;
    const GeneratorContext& ctx = rec.file.ctx;
    for (int n1 = 1; n1 <= 2; ++n1)
      for (int n2 = 1; n2 + n1 <= 4; ++n2)
        for (const Word& a : enumerate_words(n1))
          for (const Word& b : enumerate_words(n2))
            CHECK(evaluate(Word::pair(a, b), t, ctx) ==
                  t.at(evaluate(a, t, ctx), evaluate(b, t, ctx)));
  }
}
