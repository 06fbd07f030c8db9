#pragma once

// Exhaustive small-graph enumeration for the test suites: all graphs up to
// isomorphism via canonical (minimal) upper-triangle bitmasks.  Fine for
// order <= 7 when filtered early.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hollow/graph.hpp"

namespace hollow_test {

inline int pair_bit(int i, int j, int n) {
  // column-order upper triangle: (0,1),(0,2),(1,2),(0,3),...
  if (i > j) std::swap(i, j);
  (void)n;
  return j * (j - 1) / 2 + i;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& p,
                                int n) {
  std::uint32_t out = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask & (1u << pair_bit(i, j, n)))
        out |= 1u << pair_bit(p[i], p[j], n);
  return out;
}

inline hollow::Graph graph_from_mask(std::uint32_t mask, int n) {
  std::vector<hollow::VertexPair> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask & (1u << pair_bit(i, j, n))) edges.push_back({i, j});
  return hollow::Graph(n, edges);
}

/// All graphs of the given order, one per isomorphism class.
inline const std::vector<hollow::Graph>& all_graphs(int n) {
  static std::vector<std::vector<hollow::Graph>> cache(9);
  if (n < 1 || n > 6) throw hollow::ParameterError("enumeration needs 1..6");
  auto& slot = cache[n];
  if (!slot.empty()) return slot;
  auto perms = all_permutations(n);
  int bits = n * (n - 1) / 2;
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& p : perms)
      canon = std::min(canon, apply_perm(mask, p, n));
    if (seen.insert(canon).second) slot.push_back(graph_from_mask(canon, n));
  }
  return slot;
}

inline std::vector<hollow::Graph> connected_graphs(int n) {
  std::vector<hollow::Graph> out;
  for (const auto& g : all_graphs(n))
    if (hollow::is_connected(g)) out.push_back(g);
  return out;
}

/// Connected bipartite graphs of the given order (n <= 7), enumerated via
/// explicit side splits so order 7 stays cheap.
inline std::vector<hollow::Graph> connected_bipartite_graphs(int n) {
  if (n == 1) return {hollow::Graph(1, {})};
  auto perms = all_permutations(n);
  std::set<std::uint32_t> seen;
  std::vector<hollow::Graph> out;
  for (int a = 1; 2 * a <= n; ++a) {
    int b = n - a;
    int cross = a * b;
    for (std::uint32_t pick = 0; pick < (1u << cross); ++pick) {
      std::uint32_t mask = 0;
      int bit = 0;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j, ++bit)
          if (pick & (1u << bit)) mask |= 1u << pair_bit(i, a + j, n);
      auto g = graph_from_mask(mask, n);
      if (!hollow::is_connected(g)) continue;
      std::uint32_t canon = mask;
      for (const auto& p : perms)
        canon = std::min(canon, apply_perm(mask, p, n));
      if (seen.insert(canon).second) out.push_back(graph_from_mask(canon, n));
    }
  }
  return out;
}

}  // namespace hollow_test
