#include "wq/iso.hpp"

#include <stdexcept>

#include "wq/groupoid.hpp"

namespace wq {

namespace {

// Extends a -> x, b -> y by closing under products.  The pair (a, b)
// generates A, so on success the map is total.
bool extend_pair(const CayleyTable& A, const CayleyTable& B, int a, int b,
                 int x, int y, std::vector<int>& map) {
  const int n = A.order();
  map.assign(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> worklist;
  auto assign = [&](int src, int dst) {
    if (map[src] != -1) return map[src] == dst;
    if (used[dst]) return false;  // injectivity
    map[src] = dst;
    used[dst] = 1;
    worklist.push_back(src);
    return true;
  };
  if (!assign(a, x)) return false;
  if (!assign(b, y)) return false;
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    int u = worklist[i];
    for (std::size_t j = 0; j <= i; ++j) {
      int v = worklist[j];
      if (!assign(A.at(u, v), B.at(map[u], map[v]))) return false;
      if (!assign(A.at(v, u), B.at(map[v], map[u]))) return false;
    }
  }
  for (int s = 0; s < n; ++s)
    if (map[s] == -1) return false;  // pair failed to generate
  // Full homomorphism check before reporting success.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (map[A.at(u, v)] != B.at(map[u], map[v])) return false;
  return true;
}

IsoResult search(const CayleyTable& a, const CayleyTable& b,
                 const GeneratorContext* ctx_a, const GeneratorContext* ctx_b) {
  if (!is_one_step(a).ok)
    throw std::invalid_argument(
        "find_isomorphism requires a one-step left operand");
  IsoResult res;
  if (a.order() != b.order()) return res;
  std::vector<int> map;
  if (ctx_a && ctx_b) {
    ++res.pairs_examined;
    if (extend_pair(a, b, ctx_a->e, ctx_a->f, ctx_b->e, ctx_b->f, map))
      res.map = std::move(map);
    return res;
  }
  const int pa = 0, pb = 1;  // any distinct pair of A generates A
  for (int x = 0; x < b.order(); ++x)
    for (int y = 0; y < b.order(); ++y) {
      if (x == y) continue;
      ++res.pairs_examined;
      if (extend_pair(a, b, pa, pb, x, y, map)) {
        res.map = std::move(map);
        return res;
      }
    }
  return res;
}

}  // namespace

IsoResult find_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  return search(a, b, nullptr, nullptr);
}

IsoResult find_isomorphism(const CayleyTable& a, const CayleyTable& b,
                           const GeneratorContext& ctx_a,
                           const GeneratorContext& ctx_b) {
  return search(a, b, &ctx_a, &ctx_b);
}

}  // namespace wq
