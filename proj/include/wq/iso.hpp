#pragma once

#include <optional>
#include <vector>

#include "wq/cayley_table.hpp"

namespace wq {

struct IsoResult {
  /// map[i] = image in B of element i of A, when an isomorphism exists.
  std::optional<std::vector<int>> map;
  /// Ordered candidate image pairs examined before success/exhaustion.
  int pairs_examined = 0;

  bool found() const { return map.has_value(); }
};

/// Isomorphism search specialised to one-step tables: any distinct pair of A
/// generates A, so a candidate is determined by the images of one fixed pair
/// and search runs over ordered pairs of B, not permutations.  When pointed
/// generators are supplied, only ctx_a -> ctx_b is tried (e to e, f to f).
///
/// Every returned map is verified against all of A x A before returning.
/// Throws std::invalid_argument when A is not one-step.
IsoResult find_isomorphism(const CayleyTable& a, const CayleyTable& b);
IsoResult find_isomorphism(const CayleyTable& a, const CayleyTable& b,
                           const GeneratorContext& ctx_a,
                           const GeneratorContext& ctx_b);

}  // namespace wq
