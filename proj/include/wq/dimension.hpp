#pragma once

#include <vector>

#include "wq/cayley_table.hpp"
#include "wq/word.hpp"

namespace wq {

struct DimensionReport {
  /// Minimum length of a word over {f, g} evaluating to e.  Always >= 2 on a
  /// one-step table.
  int value = 0;
  /// A word of that length evaluating to e: the lexicographically least
  /// rendering among the minimal-length words.
  Word witness = Word::leaf(Letter::F);
};

/// Level construction: L1 = {f, g}, L_k = union of L_i * L_j over i+j = k;
/// the value is the least k with e in L_k.  Throws std::runtime_error when e
/// is not reached within order^2 levels (the table is not generated by
/// {f, g}).
DimensionReport dimension(const CayleyTable& t, const GeneratorContext& ctx);

struct PairDimension {
  int e = 0, f = 0, value = 0;
};

struct AllPairsReport {
  std::vector<PairDimension> pairs;  // every ordered distinct pair
  int min = 0, max = 0;
  bool uniform = false;
};

/// Dimension for every ordered pair of distinct elements.  Requires a
/// one-step table (every pair generates); throws std::invalid_argument
/// otherwise.
AllPairsReport dimension_all_pairs(const CayleyTable& t);

}  // namespace wq
