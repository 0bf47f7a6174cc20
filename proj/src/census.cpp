#include "wq/census.hpp"

#include <atomic>
#include <thread>

#include "wq/iso.hpp"

namespace wq {

std::string to_string(WordClass c) {
  switch (c) {
    case WordClass::degenerate:
      return "degenerate";
    case WordClass::reducible:
      return "reducible";
    case WordClass::genuine:
      return "genuine";
    case WordClass::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

CensusReport run_census(int n, const ClosureOptions& opts, int jobs) {
  if (n < 2) throw std::invalid_argument("census needs n >= 2");
  CensusReport rep;
  rep.n = n;
  std::vector<Word> words = enumerate_words(n);
  rep.total_words = static_cast<long long>(words.size());

  std::vector<ClosureOutcome> outcomes(words.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < words.size(); ++i)
      outcomes[i] = construct(words[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= words.size()) return;
        outcomes[i] = construct(words[i], opts);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Aggregate in enumeration order so the report is independent of the
  // worker count.
  for (std::size_t i = 0; i < words.size(); ++i) {
    WordVerdict v;
    v.word = words[i];
    const ClosureOutcome& out = outcomes[i];
    if (const auto* deg = out.degenerate()) {
      v.kind = WordClass::degenerate;
      v.reason = deg->reason;
    } else if (out.budget_exceeded()) {
      v.kind = WordClass::budget_exceeded;
      ++rep.budget_exceeded_count;
    } else {
      const ClosureSuccess& s = *out.success();
      v.dimension = s.dim.value;
      if (s.dim.value < n) {
        v.kind = WordClass::reducible;
        v.reduced_witness = s.dim.witness;
      } else {
        v.kind = WordClass::genuine;
        v.order = s.table.order();
        // Pointed isomorphism (e to e, f to f) against known classes.
        for (auto& cls : rep.classes) {
          if (cls.order != v.order) continue;
          if (find_isomorphism(s.table, cls.model, s.ctx, cls.ctx).found()) {
            v.genuine_class = cls.id;
            cls.word_indices.push_back(static_cast<int>(i));
            break;
          }
        }
        if (v.genuine_class < 0) {
          GenuineClass cls{static_cast<int>(rep.classes.size()),
                           {static_cast<int>(i)},
                           s.table,
                           s.ctx,
                           s.table.order(),
                           0};
          v.genuine_class = cls.id;
          rep.classes.push_back(std::move(cls));
        }
      }
    }
    rep.words.push_back(std::move(v));
  }

  // Plain (unpointed) isomorphism classes over the pointed representatives.
  std::vector<int> plain_reps;
  for (auto& cls : rep.classes) {
    int found = -1;
    for (std::size_t r = 0; r < plain_reps.size(); ++r) {
      const GenuineClass& other = rep.classes[plain_reps[r]];
      if (other.order != cls.order) continue;
      if (find_isomorphism(cls.model, other.model).found()) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(plain_reps.size());
      plain_reps.push_back(cls.id);
    }
    cls.plain_class = found;
  }
  rep.plain_class_count = static_cast<int>(plain_reps.size());

  for (const auto& cls : rep.classes) {
    rep.class_orders.push_back(cls.order);
    rep.max_order = std::max(rep.max_order, cls.order);
  }
  rep.max_order_is_lower_bound = rep.budget_exceeded_count > 0;
  return rep;
}

namespace {

int pr(const CayleyTable& t, int a, int b) { return t.at(a, b); }

// xyx = xy.x (elasticity makes the reading immaterial on W tables).
int tri(const CayleyTable& t, int x, int y) { return t.at(t.at(x, y), x); }

}  // namespace

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> names = {
      "x = y(y(yxy))", "x = y(y(xy.y))", "x = (yxy)(yx)", "x = (yx)(yxy)",
      "x = y(yx.xy)",  "x = y(xy.yx)",   "xy.x = y",
  };
  return names;
}

bool catalog_identity_holds(const CayleyTable& t, int idx) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      switch (idx) {
        case 0:  // x = y(y(yxy))
          ok = x == pr(t, y, pr(t, y, tri(t, y, x)));
          break;
        case 1:  // x = y(y(xy.y))
          ok = x == pr(t, y, pr(t, y, pr(t, pr(t, x, y), y)));
          break;
        case 2:  // x = (yxy)(yx)
          ok = x == pr(t, tri(t, y, x), pr(t, y, x));
          break;
        case 3:  // x = (yx)(yxy)
          ok = x == pr(t, pr(t, y, x), tri(t, y, x));
          break;
        case 4:  // x = y(yx.xy)
          ok = x == pr(t, y, pr(t, pr(t, y, x), pr(t, x, y)));
          break;
        case 5:  // x = y(xy.yx)
          ok = x == pr(t, y, pr(t, pr(t, x, y), pr(t, y, x)));
          break;
        case 6:  // xy.x = y
          ok = y == pr(t, pr(t, x, y), x);
          break;
        default:
          throw std::invalid_argument("unknown catalog identity");
      }
      if (!ok) return false;
    }
  return true;
}

bool relation_identity_holds(const CayleyTable& t, const Word& w) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      GeneratorContext ctx = GeneratorContext::with(t, x, y);
      if (evaluate(w, t, ctx) != x) return false;
    }
  return true;
}

std::vector<ClassIdentityTags> identity_tags(const CensusReport& report) {
  std::vector<ClassIdentityTags> tags;
  for (const auto& cls : report.classes) {
    ClassIdentityTags tag;
    tag.class_id = cls.id;
    const Word& w = report.words[cls.word_indices.front()].word;
    tag.relation_identity = relation_identity_holds(cls.model, w);
    for (std::size_t i = 0; i < identity_catalog().size(); ++i)
      if (catalog_identity_holds(cls.model, static_cast<int>(i)))
        tag.catalog_matches.push_back(static_cast<int>(i));
    tags.push_back(std::move(tag));
  }
  return tags;
}

}  // namespace wq
