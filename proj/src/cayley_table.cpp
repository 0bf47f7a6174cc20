#include "wq/cayley_table.hpp"

#include <stdexcept>
#include <unordered_set>

namespace wq {

CayleyTable::CayleyTable(int order, std::vector<int> cells,
                         std::vector<std::string> labels)
    : order_(order), cells_(std::move(cells)), labels_(std::move(labels)) {
  if (order_ < 1) throw std::invalid_argument("table order must be >= 1");
  if (cells_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("table needs order*order entries");
  for (int v : cells_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("table entry out of range: " +
                                  std::to_string(v));
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (int i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("label count must equal order");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate label: " + l);
}

GeneratorContext GeneratorContext::with(const CayleyTable& t, int e, int f) {
  if (e < 0 || f < 0 || e >= t.order() || f >= t.order())
    throw std::invalid_argument("generator index out of range");
  if (e == f) throw std::invalid_argument("generators must be distinct");
  GeneratorContext ctx;
  ctx.e = e;
  ctx.f = f;
  ctx.g = t.at(e, f);
  ctx.h = t.at(f, e);
  return ctx;
}

}  // namespace wq
