#include "wq/rmtester.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "wq/groupoid.hpp"

namespace wq {

namespace {

// Rejection sampling keeps draws identical across standard libraries
// (std::uniform_int_distribution is not portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

long long count_detected(const CayleyTable& t, long long samples,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = static_cast<std::uint64_t>(t.order());
  long long violations = 0;
  for (long long i = 0; i < samples; ++i) {
    int x = static_cast<int>(uniform_below(rng, n));
    int y = static_cast<int>(uniform_below(rng, n));
    int z = static_cast<int>(uniform_below(rng, n));
    if (t.at(t.at(x, y), z) != t.at(t.at(z, y), x)) ++violations;
  }
  return violations;
}

}  // namespace

SampleStats sample_rm(const CayleyTable& t, const SamplePlan& plan) {
  if (plan.samples < 1) throw std::invalid_argument("samples must be >= 1");
  SampleStats st;
  st.samples = plan.samples;
  st.violations_observed = count_detected(t, plan.samples, plan.seed);
  st.observed_fraction = static_cast<double>(st.violations_observed) /
                         static_cast<double>(plan.samples);
  st.exact_violations = count_rm_violations(t);
  const double n3 = std::pow(static_cast<double>(t.order()), 3);
  st.exact_fraction = static_cast<double>(st.exact_violations) / n3;
  st.detected = st.violations_observed > 0;
  return st;
}

CayleyTable perturb_swaps(const CayleyTable& t, int swaps, std::uint64_t seed) {
  const int n = t.order();
  if (n < 3)
    throw std::invalid_argument("need order >= 3 to swap off-diagonal cells");
  std::vector<int> cells = t.cells();
  std::mt19937_64 rng(splitmix64(seed ^ 0x70657274757262ull));
  for (int s = 0; s < swaps; ++s) {
    int r = static_cast<int>(uniform_below(rng, n));
    int c1 = static_cast<int>(uniform_below(rng, n - 1));
    if (c1 >= r) ++c1;  // skip the diagonal column
    int c2;
    do {
      c2 = static_cast<int>(uniform_below(rng, n - 1));
      if (c2 >= r) ++c2;
    } while (c2 == c1);
    std::swap(cells[r * n + c1], cells[r * n + c2]);
  }
  return CayleyTable(n, std::move(cells), t.labels());
}

std::vector<DetectionPoint> detection_curve(const CayleyTable& t,
                                            const std::vector<long long>& ks,
                                            long long trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const double n3 = std::pow(static_cast<double>(t.order()), 3);
  const double p = static_cast<double>(count_rm_violations(t)) / n3;
  std::vector<DetectionPoint> out;
  for (long long k : ks) {
    DetectionPoint pt;
    pt.k = k;
    pt.trials = trials;
    pt.predicted = 1.0 - std::pow(1.0 - p, static_cast<double>(k));
    for (long long trial = 0; trial < trials; ++trial) {
      std::uint64_t trial_seed = splitmix64(seed + 0x9e37 * (trial + 1) +
                                            static_cast<std::uint64_t>(k));
      if (count_detected(t, k, trial_seed) > 0) ++pt.detecting_trials;
    }
    pt.empirical = static_cast<double>(pt.detecting_trials) /
                   static_cast<double>(trials);
    out.push_back(pt);
  }
  return out;
}

}  // namespace wq
