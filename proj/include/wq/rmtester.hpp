#pragma once

#include <cstdint>
#include <vector>

#include "wq/cayley_table.hpp"

namespace wq {

/// Monte-Carlo plan: sample k triples (x, y, z) uniformly with replacement
/// and test xy.z = zy.x on each.  The table under test is fixed; only the
/// sampled triples are random.
struct SamplePlan {
  long long samples = 1000;
  std::uint64_t seed = 0;
};

struct SampleStats {
  long long samples = 0;
  long long violations_observed = 0;
  double observed_fraction = 0.0;
  long long exact_violations = 0;  // full order^3 count
  double exact_fraction = 0.0;
  bool detected = false;  // at least one sampled violation
};

/// Requires samples >= 1.  Identical seeds give bit-identical outputs.
SampleStats sample_rm(const CayleyTable& t, const SamplePlan& plan);

/// Copy of the table with `swaps` random same-row swaps of two off-diagonal
/// entries.  The idempotent diagonal is never touched, so perturbed tables
/// remain plausible near-misses.
CayleyTable perturb_swaps(const CayleyTable& t, int swaps, std::uint64_t seed);

struct DetectionPoint {
  long long k = 0;
  double predicted = 0.0;  // 1 - (1 - p)^k with p the exact fraction
  double empirical = 0.0;  // share of trials with >= 1 sampled violation
  long long detecting_trials = 0;
  long long trials = 0;
};

/// For each k, runs `trials` independent sampling rounds (per-trial seeds
/// derived from the master seed) and compares the empirical detection rate
/// with the closed form.
std::vector<DetectionPoint> detection_curve(const CayleyTable& t,
                                            const std::vector<long long>& ks,
                                            long long trials,
                                            std::uint64_t seed);

}  // namespace wq
