#include "wq/groupoid.hpp"

#include <algorithm>

namespace wq {

bool IdentityReport::all_ok() const {
  return idempotent.ok && right_modular.ok && medial.ok &&
         left_distributive.ok && right_distributive.ok && elastic.ok &&
         latin_square.ok && nowhere_commutative.ok;
}

std::vector<std::pair<std::string, const Verdict*>> IdentityReport::entries()
    const {
  return {{"idempotent", &idempotent},
          {"right_modular", &right_modular},
          {"medial", &medial},
          {"left_distributive", &left_distributive},
          {"right_distributive", &right_distributive},
          {"elastic", &elastic},
          {"latin_square", &latin_square},
          {"nowhere_commutative", &nowhere_commutative}};
}

IdentityReport check_identities(const CayleyTable& t) {
  const int n = t.order();
  IdentityReport r;

  for (int x = 0; x < n && r.idempotent.ok; ++x)
    if (t.at(x, x) != x) r.idempotent = {false, {x}, 1};

  for (int x = 0; x < n && r.right_modular.ok; ++x)
    for (int y = 0; y < n && r.right_modular.ok; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(z, y), x)) {
          r.right_modular = {false, {x, y, z}, 3};
          break;
        }

  for (int x = 0; x < n && r.medial.ok; ++x)
    for (int y = 0; y < n && r.medial.ok; ++y)
      for (int z = 0; z < n && r.medial.ok; ++z)
        for (int w = 0; w < n; ++w)
          if (t.at(t.at(x, y), t.at(z, w)) != t.at(t.at(x, z), t.at(y, w))) {
            r.medial = {false, {x, y, z, w}, 4};
            break;
          }

  for (int x = 0; x < n && r.left_distributive.ok; ++x)
    for (int y = 0; y < n && r.left_distributive.ok; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(x, t.at(y, z)) != t.at(t.at(x, y), t.at(x, z))) {
          r.left_distributive = {false, {x, y, z}, 3};
          break;
        }

  for (int x = 0; x < n && r.right_distributive.ok; ++x)
    for (int y = 0; y < n && r.right_distributive.ok; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) {
          r.right_distributive = {false, {x, y, z}, 3};
          break;
        }

  for (int x = 0; x < n && r.elastic.ok; ++x)
    for (int y = 0; y < n; ++y)
      if (t.at(t.at(x, y), x) != t.at(x, t.at(y, x))) {
        r.elastic = {false, {x, y}, 2};
        break;
      }

  // Latin: first duplicate within a row, then within a column.
  for (int x = 0; x < n && r.latin_square.ok; ++x)
    for (int y1 = 0; y1 < n && r.latin_square.ok; ++y1)
      for (int y2 = y1 + 1; y2 < n; ++y2)
        if (t.at(x, y1) == t.at(x, y2)) {
          r.latin_square = {false, {x, y1, y2}, 3};
          break;
        }
  for (int y = 0; y < n && r.latin_square.ok; ++y)
    for (int x1 = 0; x1 < n && r.latin_square.ok; ++x1)
      for (int x2 = x1 + 1; x2 < n; ++x2)
        if (t.at(x1, y) == t.at(x2, y)) {
          r.latin_square = {false, {y, x1, x2}, 3};
          break;
        }

  for (int x = 0; x < n && r.nowhere_commutative.ok; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t.at(x, y) == t.at(y, x)) {
        r.nowhere_commutative = {false, {x, y}, 2};
        break;
      }

  return r;
}

std::vector<int> generated_set(const CayleyTable& t,
                               const std::vector<int>& seed) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  for (int s : seed) add(s);
  // Worklist over freshly added members; every pair is eventually visited.
  for (std::size_t i = 0; i < members.size(); ++i) {
    int a = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      int b = members[j];
      add(t.at(a, b));
      add(t.at(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

OneStepResult is_one_step(const CayleyTable& t) {
  const int n = t.order();
  OneStepResult res;
  bool noncomm = false;
  for (int x = 0; x < n && !noncomm; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t.at(x, y) != t.at(y, x)) {
        noncomm = true;
        break;
      }
  if (!noncomm) {
    res.everywhere_commutative = true;
    return res;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (static_cast<int>(generated_set(t, {x, y}).size()) != n) {
        res.failing_pair = {x, y};
        return res;
      }
    }
  res.ok = true;
  return res;
}

Division divide(const CayleyTable& t, int x, int y) {
  const int n = t.order();
  Division d;
  for (int c = 0; c < n; ++c)
    if (t.at(x, c) == y) {
      if (d.right.kind == Solution::Kind::absent)
        d.right = {Solution::Kind::unique, c};
      else
        d.right.kind = Solution::Kind::ambiguous;
    }
  for (int r = 0; r < n; ++r)
    if (t.at(r, x) == y) {
      if (d.left.kind == Solution::Kind::absent)
        d.left = {Solution::Kind::unique, r};
      else
        d.left.kind = Solution::Kind::ambiguous;
    }
  return d;
}

long long count_rm_violations(const CayleyTable& t) {
  const int n = t.order();
  long long count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(z, y), x)) ++count;
  return count;
}

}  // namespace wq
