#include "wq/closure.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "wq/groupoid.hpp"

namespace wq {

std::string to_string(DegeneracyReason r) {
  switch (r) {
    case DegeneracyReason::collapsed_e_equals_f:
      return "collapsed (e = f)";
    case DegeneracyReason::not_one_step:
      return "not one-step";
    case DegeneracyReason::inconsistent:
      return "inconsistent";
  }
  return "?";
}

namespace {

constexpr int kLeafE = -1;
constexpr int kLeafF = -2;

class Saturator {
 public:
  Saturator(const Word& relation, const ClosureOptions& opts)
      : opts_(opts), relation_(relation) {
    grow(opts.budget + relation.length() + 4);
    add_class(kLeafE, kLeafE, 1);  // 0 = e
    add_class(kLeafF, kLeafF, 1);  // 1 = f
    int g = add_class(0, 1, 2);    // 2 = ef
    prod_at(0, 1) = static_cast<int16_t>(g);
    note("seed", "0*1 = 2 (g = ef)");
    int root = build_word(relation);
    note("relation", "class " + std::to_string(root) + " = 0 (e)");
    enqueue(root, 0);
    process_merges();
  }

  ClosureOutcome run() {
    long long rounds = 0;
    while (true) {
      if (collapsed())
        return done(ClosureDegenerate{DegeneracyReason::collapsed_e_equals_f});
      if (over_budget_)
        return done(ClosureBudgetExceeded{live_count(), opts_.budget, false});
      if (++rounds > opts_.max_rounds)
        return done(ClosureBudgetExceeded{live_count(), opts_.budget, true});
      if (sweep_cheap()) continue;
      if (sweep_medial()) continue;
      if (!introduce_fresh()) break;  // product map is total
    }
    return verify_fixpoint();
  }

 private:
  // ---- classes and union-find -----------------------------------------
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool collapsed() const { return find(0) == find(1); }

  int live_count() const { return live_; }

  std::vector<int> reps() const {
    std::vector<int> v;
    v.reserve(live_);
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (parent_[i] == static_cast<int>(i)) v.push_back(static_cast<int>(i));
    return v;
  }

  void grow(int cap) {
    std::vector<int16_t> next(static_cast<std::size_t>(cap) * cap, -1);
    for (std::size_t i = 0; i < parent_.size(); ++i)
      for (std::size_t j = 0; j < parent_.size(); ++j)
        next[i * cap + j] = prod_[i * cap_ + j];
    prod_ = std::move(next);
    cap_ = cap;
  }

  int add_class(int da, int db, int size) {
    if (live_ >= opts_.budget) {
      over_budget_ = true;
      return -1;
    }
    int id = static_cast<int>(parent_.size());
    if (id >= cap_) grow(cap_ * 2);
    parent_.push_back(id);
    def_.emplace_back(da, db);
    term_size_.push_back(size);
    ++live_;
    prod_at(id, id) = static_cast<int16_t>(id);  // idempotency
    return id;
  }

  int build_word(const Word& w) {
    if (w.is_leaf()) return find(w.letter() == Letter::F ? 1 : 2);
    int a = find(build_word(w.left()));
    int b = find(build_word(w.right()));
    int existing = P(a, b);
    if (existing >= 0) return existing;
    int id = add_class(a, b, term_size_[a] + term_size_[b]);
    if (id < 0) throw std::invalid_argument("budget too small for relation");
    prod_at(a, b) = static_cast<int16_t>(id);
    return id;
  }

  // ---- partial product map --------------------------------------------
  int16_t& prod_at(int a, int b) { return prod_[a * cap_ + b]; }

  /// a*b resolved to a representative, or -1.  Keys are normalised, so
  /// callers may pass stale class ids.
  int P(int a, int b) {
    a = find(a);
    b = find(b);
    int16_t& slot = prod_at(a, b);
    if (slot < 0) return -1;
    int v = find(slot);
    slot = static_cast<int16_t>(v);
    return v;
  }

  void note(const char* rule, std::string detail) {
    if (opts_.keep_trace) trace_.push_back({rule, std::move(detail)});
  }

  void enqueue(int a, int b) { pending_.emplace_back(a, b); }

  /// Defines a*b = v, or merges the already-recorded value with v.
  void put(int a, int b, int v, const char* rule) {
    a = find(a);
    b = find(b);
    v = find(v);
    int16_t& slot = prod_at(a, b);
    if (slot < 0) {
      slot = static_cast<int16_t>(v);
      changed_ = true;
      note(rule, "define " + std::to_string(a) + "*" + std::to_string(b) +
                     " = " + std::to_string(v));
    } else if (find(slot) != v) {
      note(rule, "equate " + std::to_string(find(slot)) + " = " +
                     std::to_string(v) + " at " + std::to_string(a) + "*" +
                     std::to_string(b));
      enqueue(find(slot), v);
      process_merges();
      changed_ = true;
    }
  }

  void process_merges() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // older class survives
      note("merge", "class " + std::to_string(b) + " -> " + std::to_string(a));
      parent_[b] = a;
      --live_;
      changed_ = true;
      const int total = static_cast<int>(parent_.size());
      // Fold the dead row and column into the survivor; clashes between
      // previously distinct entries queue further merges (congruence).
      for (int y = 0; y < total; ++y) {
        int16_t& from = prod_at(b, y);
        if (from < 0) continue;
        int v = find(from);
        from = -1;
        int16_t& to = prod_at(a, find(y));
        if (to < 0)
          to = static_cast<int16_t>(v);
        else if (find(to) != v)
          pending_.emplace_back(find(to), v);
      }
      for (int x = 0; x < total; ++x) {
        int16_t& from = prod_at(x, b);
        if (from < 0) continue;
        int v = find(from);
        from = -1;
        int16_t& to = prod_at(find(x), a);
        if (to < 0)
          to = static_cast<int16_t>(v);
        else if (find(to) != v)
          pending_.emplace_back(find(to), v);
      }
      if (collapsed()) {
        pending_.clear();
        return;
      }
    }
  }

  // ---- identity propagation --------------------------------------------
  // Each instance over currently defined products either defines the
  // missing side or merges the two sides' values.
  void fire(int la, int lb, int ra, int rb, const char* rule) {
    int lhs = P(la, lb), rhs = P(ra, rb);
    if (lhs < 0 && rhs < 0) return;
    if (lhs < 0)
      put(la, lb, rhs, rule);
    else if (rhs < 0)
      put(ra, rb, lhs, rule);
    else if (lhs != rhs)
      put(la, lb, rhs, rule);
  }

  bool stop() const { return collapsed() || over_budget_; }

  bool sweep_cheap() {
    changed_ = false;
    auto rs = reps();
    for (int x : rs) {
      for (int y : rs) {
        int p = P(x, y);
        if (p < 0) continue;
        // right modularity: xy.z = zy.x
        for (int z : rs) {
          int q = P(z, y);
          if (q < 0) continue;
          p = P(x, y);
          if (p < 0) break;
          fire(p, z, q, x, "right-modularity");
          if (stop()) return true;
        }
        // elasticity: xy.x = x.yx
        p = P(x, y);
        int q = P(y, x);
        if (p >= 0 && q >= 0) {
          fire(p, x, x, q, "elasticity");
          if (stop()) return true;
        }
      }
    }
    // left distributivity: x.yz = xy.xz
    for (int y : rs) {
      for (int z : rs) {
        int u = P(y, z);
        if (u < 0) continue;
        for (int x : rs) {
          u = P(y, z);
          if (u < 0) break;
          int v = P(x, y), w = P(x, z);
          if (v < 0 || w < 0) continue;
          fire(x, u, v, w, "left-distributivity");
          if (stop()) return true;
        }
      }
    }
    // right distributivity: xy.z = xz.yz
    for (int x : rs) {
      for (int y : rs) {
        int p = P(x, y);
        if (p < 0) continue;
        for (int z : rs) {
          p = P(x, y);
          if (p < 0) break;
          int v = P(x, z), w = P(y, z);
          if (v < 0 || w < 0) continue;
          fire(p, z, v, w, "right-distributivity");
          if (stop()) return true;
        }
      }
    }
    // cancellation on rows and columns
    for (int x : rs) {
      for (int a : rs) {
        int va = P(x, a);
        if (va < 0) continue;
        for (int b : rs) {
          if (b >= a) break;
          int vb = P(x, b);
          if (vb >= 0 && vb == va && find(a) != find(b)) {
            note("left-cancellation",
                 std::to_string(find(x)) + "*" + std::to_string(find(a)) +
                     " = " + std::to_string(find(x)) + "*" +
                     std::to_string(find(b)));
            enqueue(a, b);
            process_merges();
            changed_ = true;
            if (stop()) return true;
            break;
          }
        }
      }
      for (int a : rs) {
        int va = P(a, x);
        if (va < 0) continue;
        for (int b : rs) {
          if (b >= a) break;
          int vb = P(b, x);
          if (vb >= 0 && vb == va && find(a) != find(b)) {
            note("right-cancellation",
                 std::to_string(find(a)) + "*" + std::to_string(find(x)) +
                     " = " + std::to_string(find(b)) + "*" +
                     std::to_string(find(x)));
            enqueue(a, b);
            process_merges();
            changed_ = true;
            if (stop()) return true;
            break;
          }
        }
      }
    }
    return changed_;
  }

  // mediality: xy.zw = xz.yw -- quartic scan, run only when the cubic rules
  // stall
  bool sweep_medial() {
    changed_ = false;
    auto rs = reps();
    for (int x : rs)
      for (int y : rs) {
        int p = P(x, y);
        if (p < 0) continue;
        for (int z : rs) {
          int r = P(x, z);
          if (r < 0) continue;
          for (int w : rs) {
            p = P(x, y);
            r = P(x, z);
            if (p < 0 || r < 0) break;
            int q = P(z, w), s = P(y, w);
            if (q < 0 || s < 0) continue;
            fire(p, q, r, s, "mediality");
            if (stop()) return true;
          }
        }
      }
    return changed_;
  }

  /// Introduces the smallest undefined product as a fresh element:
  /// breadth-first by combined term size, then left size, then (a, b).
  bool introduce_fresh() {
    auto rs = reps();
    int best_a = -1, best_b = -1;
    long long best_key = -1;
    for (int a : rs)
      for (int b : rs) {
        if (prod_at(a, b) >= 0) continue;
        long long key =
            (static_cast<long long>(term_size_[a] + term_size_[b]) << 20) |
            (static_cast<long long>(term_size_[a]) << 10);
        if (best_key < 0 || key < best_key) {
          best_key = key;
          best_a = a;
          best_b = b;
        }
      }
    if (best_a < 0) return false;
    int id = add_class(best_a, best_b, term_size_[best_a] + term_size_[best_b]);
    if (id < 0) return true;  // over budget; the main loop reports it
    prod_at(best_a, best_b) = static_cast<int16_t>(id);
    note("fresh", "class " + std::to_string(id) + " := " +
                      std::to_string(best_a) + "*" + std::to_string(best_b));
    return true;
  }

  // ---- final classification ---------------------------------------------
  std::string render_term(int c) const {
    c = find(c);
    auto [a, b] = def_[c];
    if (a == kLeafE) return "e";
    if (a == kLeafF) return "f";
    auto wrap = [](const std::string& s) {
      return s.size() == 1 ? s : "(" + s + ")";
    };
    return wrap(render_term(a)) + wrap(render_term(b));
  }

  template <typename Result>
  ClosureOutcome done(Result result) {
    ClosureOutcome out;
    out.result = std::move(result);
    out.trace = std::move(trace_);
    return out;
  }

  ClosureOutcome verify_fixpoint() {
    auto rs = reps();
    std::sort(rs.begin(), rs.end());
    const int n = static_cast<int>(rs.size());
    std::vector<int> index(parent_.size(), -1);
    for (int i = 0; i < n; ++i) index[rs[i]] = i;
    std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::string> names;
    names.reserve(n);
    for (int r : rs) names.push_back(render_term(r));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int v = P(rs[i], rs[j]);
        assert(v >= 0);
        cells[i * n + j] = index[v];
      }
    CayleyTable table(n, std::move(cells), names);
    GeneratorContext ctx =
        GeneratorContext::with(table, index[find(0)], index[find(1)]);

    // Cancellation was speculative: nothing is a model until the whole
    // battery, the one-step property and the relation itself are re-checked
    // on the finished table.
    IdentityReport battery = check_identities(table);
    bool relation_holds = evaluate(relation_, table, ctx) == ctx.e;
    if (!battery.all_ok() || !relation_holds) {
      std::string detail;
      for (const auto& [name, verdict] : battery.entries())
        if (!verdict->ok) detail += (detail.empty() ? "" : ", ") + name;
      if (!relation_holds)
        detail += (detail.empty() ? "" : ", ") + std::string("relation");
      DegeneracyReason reason = !battery.nowhere_commutative.ok
                                    ? DegeneracyReason::not_one_step
                                    : DegeneracyReason::inconsistent;
      return done(ClosureDegenerate{reason, n, "failed: " + detail,
                                    std::move(table), ctx});
    }
    OneStepResult os = is_one_step(table);
    if (!os.ok) {
      std::string detail = "a proper subgroupoid survives";
      if (os.failing_pair)
        detail += ": pair (" + std::to_string(os.failing_pair->first) + ", " +
                  std::to_string(os.failing_pair->second) +
                  ") does not generate";
      return done(ClosureDegenerate{DegeneracyReason::not_one_step, n,
                                    std::move(detail), std::move(table), ctx});
    }
    DimensionReport dim = dimension(table, ctx);
    return done(ClosureSuccess{std::move(table), ctx, std::move(names),
                               std::move(dim)});
  }

  ClosureOptions opts_;
  Word relation_;
  int cap_ = 0;
  int live_ = 0;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> def_;
  std::vector<int> term_size_;
  std::vector<int16_t> prod_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<TraceStep> trace_;
  bool changed_ = false;
  bool over_budget_ = false;
};

}  // namespace

ClosureOutcome construct(const Word& relation, const ClosureOptions& opts) {
  if (relation.length() < 2)
    throw std::invalid_argument("relation must have length >= 2");
  if (opts.budget < 4) throw std::invalid_argument("budget must be >= 4");
  return Saturator(relation, opts).run();
}

}  // namespace wq
