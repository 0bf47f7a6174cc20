#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wq/cayley_table.hpp"

namespace wq {

/// One verdict of the identity battery.  `witness` holds the first
/// counterexample in lexicographic scan order when ok is false; arity says
/// how many of its slots are meaningful.
struct Verdict {
  bool ok = true;
  std::array<int, 4> witness{};
  int arity = 0;
};

struct IdentityReport {
  Verdict idempotent;            // x*x = x
  Verdict right_modular;         // xy.z = zy.x
  Verdict medial;                // xy.zw = xz.yw
  Verdict left_distributive;     // x.yz = xy.xz
  Verdict right_distributive;    // xy.z = xz.yz
  Verdict elastic;               // xy.x = x.yx
  Verdict latin_square;          // rows and columns are permutations
  Verdict nowhere_commutative;   // xy = yx implies x = y

  bool all_ok() const;

  /// (name, verdict) pairs in battery order, for report rendering.
  std::vector<std::pair<std::string, const Verdict*>> entries() const;
};

/// Exhaustive scan of the whole battery.
IdentityReport check_identities(const CayleyTable& t);

/// Least superset of seed closed under the product, ascending indices.
std::vector<int> generated_set(const CayleyTable& t,
                               const std::vector<int>& seed);

struct OneStepResult {
  bool ok = false;
  /// Set when the table is commutative (no noncommuting pair exists).
  bool everywhere_commutative = false;
  /// A distinct pair that fails to generate, when ok is false and the table
  /// is non-commutative.
  std::optional<std::pair<int, int>> failing_pair;
};

/// True iff the table is non-commutative and every ordered pair of distinct
/// elements generates the whole table.
OneStepResult is_one_step(const CayleyTable& t);

struct Solution {
  enum class Kind { unique, absent, ambiguous };
  Kind kind = Kind::absent;
  int value = -1;  // first solution found, when any
};

struct Division {
  Solution right;  // t with x*t = y
  Solution left;   // s with s*x = y
};

/// Solves x*t = y (row x) and s*x = y (column x).  On a Latin square both
/// solutions are unique; otherwise absence or ambiguity is reported.
Division divide(const CayleyTable& t, int x, int y);

/// Number of triples (x,y,z) with xy.z != zy.x, over all order^3 triples.
long long count_rm_violations(const CayleyTable& t);

}  // namespace wq
