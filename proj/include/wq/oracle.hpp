#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wq/cayley_table.hpp"
#include "wq/word.hpp"

namespace wq {

/// Which properties a searched model must satisfy.  The relation, when
/// present, is e = w(f, ef) with e = 0 and f = 1.
struct SearchSpec {
  int order = 0;
  bool idempotent = false;
  bool right_modular = false;
  bool medial = false;
  bool left_distributive = false;
  bool right_distributive = false;
  bool elastic = false;
  bool latin = false;
  bool one_step = false;
  std::optional<Word> relation;
};

/// Exhaustive backtracking search over partial tables with identity and
/// Latin propagation; returns all models of exactly spec.order, up to
/// isomorphism.  Independent of the closure engine by construction.
/// Hard cap: order <= 6 (throws std::invalid_argument beyond it).
std::vector<CayleyTable> brute_force_models(const SearchSpec& spec,
                                            int jobs = 1);

class NoSuchAutomorphism : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The affine table x*y = t*x + (1-t)*y on Z_m.  Idempotent, medial and
/// Latin by construction; right modular exactly when t^2 + t - 1 = 0
/// (mod m), which is required (NoSuchAutomorphism otherwise).
CayleyTable affine_model(int modulus, int multiplier);

/// All multipliers t in 0..m-1 with t^2 + t - 1 = 0 (mod m).
std::vector<int> affine_multipliers(int modulus);

/// Permutation-search isomorphism test, independent of the generator-pair
/// method.  Exhaustive over all order! bijections; order <= 8.
bool isomorphic_by_permutation(const CayleyTable& a, const CayleyTable& b);

}  // namespace wq
