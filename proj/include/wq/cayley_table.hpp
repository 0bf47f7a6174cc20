#pragma once

#include <string>
#include <vector>

namespace wq {

/// Finite groupoid given by its full multiplication table.  Entries are
/// 0-based element indices; labels are presentation-only.
class CayleyTable {
 public:
  /// cells is row-major, order*order.  Labels default to "0", "1", ...
  /// Throws std::invalid_argument on out-of-range entries or duplicate
  /// labels.
  CayleyTable(int order, std::vector<int> cells,
              std::vector<std::string> labels = {});

  int order() const { return order_; }
  int at(int x, int y) const { return cells_[x * order_ + y]; }
  const std::vector<int>& cells() const { return cells_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const CayleyTable& other) const {
    return order_ == other.order_ && cells_ == other.cells_;
  }

 private:
  int order_;
  std::vector<int> cells_;
  std::vector<std::string> labels_;
};

/// Designated generators e, f together with the derived elements g = e*f and
/// h = f*e.
struct GeneratorContext {
  int e = 0;
  int f = 1;
  int g = -1;
  int h = -1;

  /// Reads g and h off the table.  Requires e != f.
  static GeneratorContext with(const CayleyTable& t, int e, int f);
};

}  // namespace wq
