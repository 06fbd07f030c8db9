#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hollow/errors.hpp"

namespace hollow {

using VertexPair = std::pair<int, int>;

/// Simple undirected graph on vertices {0..n-1}.  Immutable after
/// construction; the edge set is stored canonically (u < v, sorted).
/// An optional label records which family constructor produced it.
class Graph {
 public:
  Graph(int n, std::vector<VertexPair> edges, std::string label = "")
      : n_(n), label_(std::move(label)) {
    if (n <= 0) throw ParameterError("graph order must be positive");
    for (auto& [u, v] : edges) {
      if (u == v) throw ParameterError("self-loop rejected");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParameterError("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    nbrs_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
      adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
      nbrs_[u].push_back(v);
      nbrs_[v].push_back(u);
    }
  }

  int order() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& label() const { return label_; }

  bool has_edge(int u, int v) const {
    return u != v && adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  /// Index of {u,v} in edges(), or -1.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(),
                               VertexPair{u, v});
    if (it == edges_.end() || *it != VertexPair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<VertexPair> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Families

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  complete_tripartite_balanced,
  star,
  wheel,
  hypercube,
  complete_split,
  spider,
  empty,
};

struct FamilySpec {
  Family kind;
  std::vector<int> params;
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "kmn";
    case Family::complete_tripartite_balanced: return "krrr";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::hypercube: return "hypercube";
    case Family::complete_split: return "split";
    case Family::spider: return "spider";
    case Family::empty: return "empty";
  }
  return "?";
}

inline std::string to_string(const FamilySpec& spec) {
  std::string s = family_name(spec.kind);
  for (std::size_t i = 0; i < spec.params.size(); ++i)
    s += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  return s;
}

/// Parses e.g. "wheel:5", "kmn:2,3", "spider:2,1,1".
inline FamilySpec parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw ParseError("family spec needs name:params", colon == std::string::npos
                                                          ? text.size()
                                                          : colon);
  std::string name = text.substr(0, colon);
  Family kind;
  if (name == "path") kind = Family::path;
  else if (name == "cycle") kind = Family::cycle;
  else if (name == "complete" || name == "kn") kind = Family::complete;
  else if (name == "kmn" || name == "complete_bipartite")
    kind = Family::complete_bipartite;
  else if (name == "krrr" || name == "complete_tripartite_balanced")
    kind = Family::complete_tripartite_balanced;
  else if (name == "star") kind = Family::star;
  else if (name == "wheel") kind = Family::wheel;
  else if (name == "hypercube" || name == "qd") kind = Family::hypercube;
  else if (name == "split" || name == "complete_split")
    kind = Family::complete_split;
  else if (name == "spider") kind = Family::spider;
  else if (name == "empty") kind = Family::empty;
  else throw ParseError("unknown family '" + name + "'", 0);

  std::vector<int> params;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    if (next == pos) throw ParseError("empty family parameter", pos);
    int value = 0;
    for (std::size_t i = pos; i < next; ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("family parameter must be a nonnegative integer", i);
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("family parameter too large", i);
    }
    params.push_back(value);
    pos = next + 1;
  }
  return FamilySpec{kind, std::move(params)};
}

/// Builds the canonical member of a graph family.  Vertex numbering is
/// frozen per family; realizers index blocks positionally:
///   path/cycle: consecutive;  wheel W_n: rim cycle 0..n-2, hub n-1;
///   kmn: side of size m first;  krrr: three consecutive blocks of size r;
///   split (r,s): independent set 0..r-1, clique r..r+s-1;
///   spider: center 0, legs laid out consecutively;
///   hypercube: vertex index = coordinate bits.
inline Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ParameterError(std::string("invalid parameters for ") +
                                  family_name(spec.kind) + ": " + what);
  };
  std::vector<VertexPair> e;
  switch (spec.kind) {
    case Family::path: {
      need(p.size() == 1 && p[0] >= 1, "need n >= 1");
      for (int i = 0; i + 1 < p[0]; ++i) e.push_back({i, i + 1});
      return Graph(p[0], e, to_string(spec));
    }
    case Family::cycle: {
      need(p.size() == 1 && p[0] >= 3, "need n >= 3");
      for (int i = 0; i + 1 < p[0]; ++i) e.push_back({i, i + 1});
      e.push_back({0, p[0] - 1});
      return Graph(p[0], e, to_string(spec));
    }
    case Family::complete: {
      need(p.size() == 1 && p[0] >= 1, "need n >= 1");
      for (int i = 0; i < p[0]; ++i)
        for (int j = i + 1; j < p[0]; ++j) e.push_back({i, j});
      return Graph(p[0], e, to_string(spec));
    }
    case Family::complete_bipartite: {
      need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "need m,n >= 1");
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) e.push_back({i, p[0] + j});
      return Graph(p[0] + p[1], e, to_string(spec));
    }
    case Family::complete_tripartite_balanced: {
      need(p.size() == 1 && p[0] >= 1, "need r >= 1");
      int r = p[0];
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) e.push_back({a * r + i, b * r + j});
      return Graph(3 * r, e, to_string(spec));
    }
    case Family::star: {
      need(p.size() == 1 && p[0] >= 2, "need n >= 2");
      for (int i = 1; i < p[0]; ++i) e.push_back({0, i});
      return Graph(p[0], e, to_string(spec));
    }
    case Family::wheel: {
      need(p.size() == 1 && p[0] >= 4, "need n >= 4");
      int n = p[0];
      for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
      e.push_back({0, n - 2});
      for (int i = 0; i < n - 1; ++i) e.push_back({i, n - 1});
      return Graph(n, e, to_string(spec));
    }
    case Family::hypercube: {
      need(p.size() == 1 && p[0] >= 1 && p[0] <= 20, "need 1 <= d <= 20");
      int d = p[0];
      int n = 1 << d;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
          if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
      return Graph(n, e, to_string(spec));
    }
    case Family::complete_split: {
      need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "need r,s >= 1");
      int r = p[0], s = p[1];
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) e.push_back({r + i, r + j});
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) e.push_back({i, r + j});
      return Graph(r + s, e, to_string(spec));
    }
    case Family::spider: {
      need(p.size() >= 3, "need at least three legs");
      for (int len : p) need(len >= 1, "leg lengths must be >= 1");
      int next = 1;
      for (int len : p) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
          e.push_back({prev, next});
          prev = next++;
        }
      }
      return Graph(next, e, to_string(spec));
    }
    case Family::empty: {
      need(p.size() == 1 && p[0] >= 1, "need n >= 1");
      return Graph(p[0], {}, to_string(spec));
    }
  }
  throw ParameterError("unknown family");
}

// ---------------------------------------------------------------------------
// Graph operations

enum class GraphOp { disjoint_union, join, corona_k1, cartesian_k2 };

/// Combines graphs with frozen vertex numbering:
///   disjoint_union / join: G's vertices first, then H's shifted by |V(G)|;
///   corona_k1: leaf of vertex i is n+i;
///   cartesian_k2: copy 0 is 0..n-1, copy 1 is n..2n-1.
inline Graph combine(GraphOp op, const Graph& g,
                     const std::optional<Graph>& h = std::nullopt) {
  int n = g.order();
  std::vector<VertexPair> e = g.edges();
  switch (op) {
    case GraphOp::disjoint_union:
    case GraphOp::join: {
      if (!h) throw ParameterError("binary graph operation needs two graphs");
      for (auto [u, v] : h->edges()) e.push_back({u + n, v + n});
      if (op == GraphOp::join)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < h->order(); ++v) e.push_back({u, n + v});
      return Graph(n + h->order(), e);
    }
    case GraphOp::corona_k1: {
      for (int i = 0; i < n; ++i) e.push_back({i, n + i});
      return Graph(2 * n, e);
    }
    case GraphOp::cartesian_k2: {
      for (auto [u, v] : g.edges()) e.push_back({u + n, v + n});
      for (int i = 0; i < n; ++i) e.push_back({i, n + i});
      return Graph(2 * n, e);
    }
  }
  throw ParameterError("unknown graph operation");
}

inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw ParameterError("vertex out of range");
  if (g.order() == 1) throw ParameterError("cannot delete the last vertex");
  std::vector<VertexPair> e;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    e.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
  }
  return Graph(g.order() - 1, e);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty()) throw ParameterError("induced subgraph needs vertices");
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= g.order() || index[verts[i]] != -1)
      throw ParameterError("bad vertex list for induced subgraph");
    index[verts[i]] = static_cast<int>(i);
  }
  std::vector<VertexPair> e;
  for (auto [a, b] : g.edges())
    if (index[a] != -1 && index[b] != -1) e.push_back({index[a], index[b]});
  return Graph(static_cast<int>(verts.size()), e);
}

inline Graph complement(const Graph& g) {
  std::vector<VertexPair> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) e.push_back({i, j});
  return Graph(g.order(), e);
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

inline bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Bipartition

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
  std::vector<int> left, right;
};

/// Two-colors G if it is bipartite.  Deterministic: BFS from the lowest
/// vertex of each component; component roots (hence isolated vertices) go
/// to the first side.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition b;
  b.side.assign(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (b.side[s] != -1) continue;
    b.side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (b.side[w] == -1) {
          b.side[w] = 1 - b.side[v];
          q.push(w);
        } else if (b.side[w] == b.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v)
    (b.side[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace hollow
