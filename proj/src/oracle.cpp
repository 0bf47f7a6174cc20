#include "wq/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "wq/groupoid.hpp"
#include "wq/iso.hpp"

namespace wq {

namespace {

// Backtracking over cells in row-major order.  -1 marks an unset cell.
class Search {
 public:
  Search(const SearchSpec& spec) : spec_(spec), n_(spec.order) {
    cells_.assign(n_ * n_, -1);
    row_used_.assign(n_ * n_, 0);
    col_used_.assign(n_ * n_, 0);
    if (spec_.idempotent)
      for (int i = 0; i < n_; ++i) place(i, i, i);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (at(r, c) < 0) free_cells_.emplace_back(r, c);
  }

  // Runs the search with the first free cell pinned to the given values
  // (used to split work across threads); empty list means all values.
  std::vector<CayleyTable> run(const std::vector<int>& first_values) {
    models_.clear();
    if (free_cells_.empty()) {
      if (complete_ok()) emit();
      return std::move(models_);
    }
    auto [r, c] = free_cells_[0];
    std::vector<int> values = first_values;
    if (values.empty()) {
      values.resize(n_);
      std::iota(values.begin(), values.end(), 0);
    }
    for (int v : values) {
      if (!try_place(r, c, v)) continue;
      descend(1);
      unplace(r, c, v);
    }
    return std::move(models_);
  }

 private:
  int at(int r, int c) const { return cells_[r * n_ + c]; }

  void place(int r, int c, int v) {
    cells_[r * n_ + c] = v;
    row_used_[r * n_ + v] += 1;
    col_used_[c * n_ + v] += 1;
  }

  void unplace(int r, int c, int v) {
    cells_[r * n_ + c] = -1;
    row_used_[r * n_ + v] -= 1;
    col_used_[c * n_ + v] -= 1;
  }

  bool try_place(int r, int c, int v) {
    if (spec_.latin && (row_used_[r * n_ + v] || col_used_[c * n_ + v]))
      return false;
    place(r, c, v);
    if (partial_ok()) return true;
    unplace(r, c, v);
    return false;
  }

  void descend(std::size_t depth) {
    if (depth == free_cells_.size()) {
      if (complete_ok()) emit();
      return;
    }
    auto [r, c] = free_cells_[depth];
    for (int v = 0; v < n_; ++v) {
      if (!try_place(r, c, v)) continue;
      descend(depth + 1);
      unplace(r, c, v);
    }
  }

  // All fully-computable instances of the required identities must hold on
  // the partial table.  Instances become computable exactly once their last
  // cell is placed, so scanning everything after each placement is a
  // complete filter.
  bool partial_ok() {
    if (spec_.idempotent)
      for (int x = 0; x < n_; ++x)
        if (at(x, x) >= 0 && at(x, x) != x) return false;
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int xy = at(x, y);
        int yx = at(y, x);
        if (spec_.elastic && xy >= 0 && yx >= 0) {
          int l = at(xy, x), r = at(x, yx);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
        if (xy < 0) continue;
        for (int z = 0; z < n_; ++z) {
          if (spec_.right_modular) {
            int zy = at(z, y);
            if (zy >= 0) {
              int l = at(xy, z), r = at(zy, x);
              if (l >= 0 && r >= 0 && l != r) return false;
            }
          }
          if (spec_.left_distributive) {
            // x.yz = xy.xz with xy known
            int yz = at(y, z), xz = at(x, z);
            if (yz >= 0 && xz >= 0) {
              int l = at(x, yz), r = at(xy, xz);
              if (l >= 0 && r >= 0 && l != r) return false;
            }
          }
          if (spec_.right_distributive) {
            int xz = at(x, z), yz = at(y, z);
            if (xz >= 0 && yz >= 0) {
              int l = at(xy, z), r = at(xz, yz);
              if (l >= 0 && r >= 0 && l != r) return false;
            }
          }
        }
      }
    if (spec_.medial) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          int xy = at(x, y);
          if (xy < 0) continue;
          for (int z = 0; z < n_; ++z) {
            int xz = at(x, z);
            if (xz < 0) continue;
            for (int w = 0; w < n_; ++w) {
              int zw = at(z, w), yw = at(y, w);
              if (zw < 0 || yw < 0) continue;
              int l = at(xy, zw), r = at(xz, yw);
              if (l >= 0 && r >= 0 && l != r) return false;
            }
          }
        }
    }
    if (spec_.relation) {
      int v = partial_eval(*spec_.relation);
      if (v >= 0 && v != 0) return false;  // e is element 0
    }
    return true;
  }

  // Word value on the partial table; -1 when some needed cell is unset.
  int partial_eval(const Word& w) {
    if (w.is_leaf()) {
      if (w.letter() == Letter::F) return 1;
      return at(0, 1);  // g = e*f
    }
    int l = partial_eval(w.left());
    if (l < 0) return -1;
    int r = partial_eval(w.right());
    if (r < 0) return -1;
    return at(l, r);
  }

  bool complete_ok() {
    CayleyTable t(n_, cells_);
    IdentityReport rep = check_identities(t);
    if (spec_.idempotent && !rep.idempotent.ok) return false;
    if (spec_.right_modular && !rep.right_modular.ok) return false;
    if (spec_.medial && !rep.medial.ok) return false;
    if (spec_.left_distributive && !rep.left_distributive.ok) return false;
    if (spec_.right_distributive && !rep.right_distributive.ok) return false;
    if (spec_.elastic && !rep.elastic.ok) return false;
    if (spec_.latin && !rep.latin_square.ok) return false;
    if (spec_.one_step && !is_one_step(t).ok) return false;
    if (spec_.relation && partial_eval(*spec_.relation) != 0) return false;
    return true;
  }

  void emit() { models_.emplace_back(n_, cells_); }

  SearchSpec spec_;
  int n_;
  std::vector<int> cells_;
  std::vector<int> row_used_, col_used_;
  std::vector<std::pair<int, int>> free_cells_;
  std::vector<CayleyTable> models_;
};

bool same_model(const SearchSpec& spec, const CayleyTable& a,
                const CayleyTable& b) {
  if (spec.one_step) return find_isomorphism(a, b).found();
  return isomorphic_by_permutation(a, b);
}

}  // namespace

std::vector<CayleyTable> brute_force_models(const SearchSpec& spec, int jobs) {
  if (spec.order < 1) throw std::invalid_argument("order must be >= 1");
  if (spec.order > 6)
    throw std::invalid_argument("brute-force search is capped at order 6");
  if (spec.relation && spec.order < 2)
    throw std::invalid_argument("a relation needs order >= 2");

  std::vector<CayleyTable> found;
  if (jobs <= 1) {
    found = Search(spec).run({});
  } else {
    // Split on the first free cell's value; results are concatenated in
    // value order, so the outcome is independent of the worker count.
    std::vector<std::vector<CayleyTable>> parts(spec.order);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int v = next.fetch_add(1);
        if (v >= spec.order) return;
        parts[v] = Search(spec).run({v});
      }
    };
    for (int j = 0; j < std::min(jobs, spec.order); ++j)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& p : parts)
      for (auto& t : p) found.push_back(std::move(t));
  }

  std::vector<CayleyTable> unique;
  for (const auto& t : found) {
    bool dup = false;
    for (const auto& u : unique)
      if (same_model(spec, t, u)) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(t);
  }
  return unique;
}

std::vector<int> affine_multipliers(int modulus) {
  std::vector<int> out;
  for (int t = 0; t < modulus; ++t)
    if ((t * t + t - 1) % modulus == 0) out.push_back(t);
  return out;
}

CayleyTable affine_model(int modulus, int multiplier) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  const int m = modulus, t = ((multiplier % m) + m) % m;
  if ((t * t + t - 1) % m != 0)
    throw NoSuchAutomorphism("t^2 + t - 1 != 0 (mod " + std::to_string(m) +
                             ") for t = " + std::to_string(t));
  const int psi = ((1 - t) % m + m) % m;
  std::vector<int> cells(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) cells[x * m + y] = (t * x + psi * y) % m;
  return CayleyTable(m, std::move(cells));
}

bool isomorphic_by_permutation(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  if (n > 8)
    throw std::invalid_argument("permutation isomorphism is capped at order 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (perm[a.at(x, y)] != b.at(perm[x], perm[y])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace wq
