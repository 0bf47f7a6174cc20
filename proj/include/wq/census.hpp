#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wq/closure.hpp"
#include "wq/word.hpp"

namespace wq {

enum class WordClass { degenerate, reducible, genuine, budget_exceeded };

std::string to_string(WordClass c);

struct WordVerdict {
  Word word = Word::leaf(Letter::F);
  WordClass kind = WordClass::degenerate;
  std::optional<DegeneracyReason> reason;  // degenerate only
  int dimension = 0;                       // genuine/reducible
  std::optional<Word> reduced_witness;     // reducible: a shorter word for e
  int order = 0;                           // genuine only
  int genuine_class = -1;                  // pointed class id, genuine only
};

struct GenuineClass {
  int id = 0;
  std::vector<int> word_indices;  // members, in enumeration order
  CayleyTable model;
  GeneratorContext ctx;
  int order = 0;
  int plain_class = 0;  // unpointed isomorphism class id
};

struct CensusReport {
  int n = 0;
  long long total_words = 0;  // 2^n * Catalan(n-1)
  std::vector<WordVerdict> words;
  std::vector<GenuineClass> classes;  // pointed isomorphism classes
  int plain_class_count = 0;
  std::vector<int> class_orders;  // per pointed class
  int max_order = 0;              // M(n) over genuine classes
  bool max_order_is_lower_bound = false;
  int budget_exceeded_count = 0;
};

/// Classifies every word of length n: run the closure engine, mark the word
/// degenerate / reducible (model dimension < n) / genuine (= n), and group
/// genuine models into pointed isomorphism classes (e to e, f to f).
/// Aggregation is in enumeration order regardless of the worker count.
CensusReport run_census(int n, const ClosureOptions& opts = {}, int jobs = 1);

/// Two-variable identity catalog used to tag census classes:
///   0: x = y(y(yxy))    1: x = y(y(xy.y))   2: x = (yxy)(yx)
///   3: x = (yx)(yxy)    4: x = y(yx.xy)     5: x = y(xy.yx)
///   6: xy.x = y  (anti-rectangularity)
const std::vector<std::string>& identity_catalog();

/// Does catalog identity `idx` hold at every pair of the table?
bool catalog_identity_holds(const CayleyTable& t, int idx);

/// Does x = w(y, xy) hold at every pair (x, y)?
bool relation_identity_holds(const CayleyTable& t, const Word& w);

struct ClassIdentityTags {
  int class_id = 0;
  bool relation_identity = false;  // x = w(y, xy) for the class's first word
  std::vector<int> catalog_matches;
};

/// Evaluates the identity catalog and the class's own relation identity on
/// every genuine class of the report.
std::vector<ClassIdentityTags> identity_tags(const CensusReport& report);

}  // namespace wq
