#include "wq/dimension.hpp"

#include <stdexcept>
#include <string>

#include "wq/groupoid.hpp"

namespace wq {

namespace {

// Levels of elements reachable by words of exact length k.  Returns the
// least k with e reachable, or 0 when the cap is hit.
int reach_value(const CayleyTable& t, const GeneratorContext& ctx,
                std::vector<std::vector<char>>* levels_out) {
  const int n = t.order();
  const int cap = n * n;
  std::vector<std::vector<char>> levels;
  levels.push_back({});  // 1-based
  levels.push_back(std::vector<char>(n, 0));
  levels[1][ctx.f] = 1;
  levels[1][ctx.g] = 1;
  if (levels[1][ctx.e]) {
    // e in {f, ef} cannot happen on a cancellative table with e != f, but
    // stay honest on arbitrary input.
    if (levels_out) *levels_out = std::move(levels);
    return 1;
  }
  for (int k = 2; k <= cap; ++k) {
    std::vector<char> cur(n, 0);
    for (int i = 1; i < k; ++i) {
      const auto& li = levels[i];
      const auto& lj = levels[k - i];
      for (int a = 0; a < n; ++a) {
        if (!li[a]) continue;
        for (int b = 0; b < n; ++b)
          if (lj[b]) cur[t.at(a, b)] = 1;
      }
    }
    levels.push_back(std::move(cur));
    if (levels[k][ctx.e]) {
      if (levels_out) *levels_out = std::move(levels);
      return k;
    }
  }
  return 0;
}

}  // namespace

DimensionReport dimension(const CayleyTable& t, const GeneratorContext& ctx) {
  std::vector<std::vector<char>> levels;
  int value = reach_value(t, ctx, &levels);
  if (value == 0)
    throw std::runtime_error(
        "e is not reachable from {f, ef}: table is not generated by the pair");

  // Minimal rendering per (level, element), built bottom-up only as far as
  // the value needs.
  const int n = t.order();
  std::vector<std::vector<std::string>> best(
      value + 1, std::vector<std::string>(n));
  best[1][ctx.f] = "f";
  if (best[1][ctx.g].empty()) best[1][ctx.g] = "g";
  for (int k = 2; k <= value; ++k)
    for (int i = 1; i < k; ++i)
      for (int a = 0; a < n; ++a) {
        if (best[i][a].empty()) continue;
        for (int b = 0; b < n; ++b) {
          if (best[k - i][b].empty()) continue;
          std::string cand = "(" + best[i][a] + " " + best[k - i][b] + ")";
          std::string& slot = best[k][t.at(a, b)];
          if (slot.empty() || cand < slot) slot = std::move(cand);
        }
      }
  return {value, Word::parse(best[value][ctx.e])};
}

AllPairsReport dimension_all_pairs(const CayleyTable& t) {
  if (t.order() < 2)
    throw std::invalid_argument("no distinct generator pair exists");
  OneStepResult os = is_one_step(t);
  if (!os.ok)
    throw std::invalid_argument(
        "dimension_all_pairs requires a one-step table");
  AllPairsReport rep;
  for (int x = 0; x < t.order(); ++x)
    for (int y = 0; y < t.order(); ++y) {
      if (x == y) continue;
      GeneratorContext ctx = GeneratorContext::with(t, x, y);
      int value = reach_value(t, ctx, nullptr);
      if (value == 0)
        throw std::runtime_error("pair unexpectedly fails to generate");
      rep.pairs.push_back({x, y, value});
    }
  rep.min = rep.max = rep.pairs.front().value;
  for (const auto& p : rep.pairs) {
    rep.min = std::min(rep.min, p.value);
    rep.max = std::max(rep.max, p.value);
  }
  rep.uniform = rep.min == rep.max;
  return rep;
}

}  // namespace wq
