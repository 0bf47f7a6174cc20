#pragma once

#include <string>
#include <vector>

#include "wq/cayley_table.hpp"
#include "wq/fixtures.hpp"

namespace wq::test {

inline FixtureRecord fx(const std::string& id) { return load_fixture(id); }

// Direct product table: (a1,b1)*(a2,b2) = (a1*a2, b1*b2), index a*|B|+b.
inline CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          cells[(x1 * nb + y1) * n + (x2 * nb + y2)] =
              a.at(x1, x2) * nb + b.at(y1, y2);
  return CayleyTable(n, std::move(cells));
}

// x*y = x on `order` elements.
inline CayleyTable left_projection(int order) {
  std::vector<int> cells(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) cells[x * order + y] = x;
  return CayleyTable(order, std::move(cells));
}

// Pointed isomorphism check by generator-image extension, usable even when
// the tables are not one-step (unlike find_isomorphism), as long as the
// designated pairs generate.  Independent of the iso module.
inline bool pointed_iso_by_extension(const CayleyTable& A,
                                     const GeneratorContext& ca,
                                     const CayleyTable& B,
                                     const GeneratorContext& cb) {
  if (A.order() != B.order()) return false;
  const int n = A.order();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> wl;
  auto assign = [&](int s, int d) {
    if (map[s] != -1) return map[s] == d;
    if (used[d]) return false;
    map[s] = d;
    used[d] = 1;
    wl.push_back(s);
    return true;
  };
  if (!assign(ca.e, cb.e) || !assign(ca.f, cb.f)) return false;
  for (std::size_t i = 0; i < wl.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (!assign(A.at(wl[i], wl[j]), B.at(map[wl[i]], map[wl[j]])))
        return false;
      if (!assign(A.at(wl[j], wl[i]), B.at(map[wl[j]], map[wl[i]])))
        return false;
    }
  for (int s = 0; s < n; ++s)
    if (map[s] == -1) return false;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (map[A.at(u, v)] != B.at(map[u], map[v])) return false;
  return true;
}

}  // namespace wq::test
