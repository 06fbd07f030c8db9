#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hollow/catalog_data.hpp"
#include "hollow/graph.hpp"
#include "hollow/spectrum.hpp"

namespace hollow {

// ---------------------------------------------------------------------------
// Structural family recognition.  Deliberately predicate-based (degree and
// neighborhood structure), not general isomorphism testing.

struct RecognizedFamily {
  std::string key;          // matches the catalog's match: keys
  std::vector<int> params;  // bound left to right
};

namespace detail {

inline bool is_complete_graph(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool is_path_graph(const Graph& g) {
  if (g.order() == 1) return g.edge_count() == 0;
  if (g.edge_count() != g.order() - 1 || !is_connected(g)) return false;
  int ones = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
    if (g.degree(v) == 1) ++ones;
  }
  return ones == 2;
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.edge_count() != g.order() || !is_connected(g))
    return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline std::optional<std::pair<int, int>> as_complete_bipartite(
    const Graph& g) {
  auto bp = bipartition(g);
  if (!bp) return std::nullopt;
  auto m = bp->left.size(), n = bp->right.size();
  if (g.edges().size() != m * n) return std::nullopt;
  return std::make_pair(static_cast<int>(std::min(m, n)),
                        static_cast<int>(std::max(m, n)));
}

inline std::optional<int> as_balanced_tripartite(const Graph& g) {
  if (g.order() % 3 != 0) return std::nullopt;
  int r = g.order() / 3;
  Graph co = complement(g);
  auto comps = components(co);
  if (comps.size() != 3) return std::nullopt;
  for (const auto& c : comps) {
    if (static_cast<int>(c.size()) != r) return std::nullopt;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!co.has_edge(c[i], c[j])) return std::nullopt;
  }
  return r;
}

inline std::optional<int> as_wheel(const Graph& g) {
  int n = g.order();
  if (n < 4) return std::nullopt;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    std::vector<int> rim;
    for (int v = 0; v < n; ++v)
      if (v != hub) rim.push_back(v);
    if (is_cycle_graph(induced_subgraph(g, rim))) return n;
    break;  // with several dominating vertices the rim test already failed
  }
  return std::nullopt;
}

/// Complement is one complete component of size >= 2 plus isolated
/// vertices: the complete split graph (independent r >= 2, clique s).
inline std::optional<std::pair<int, int>> as_complete_split(const Graph& g) {
  Graph co = complement(g);
  auto comps = components(co);
  int r = -1;
  for (const auto& c : comps) {
    if (c.size() == 1) continue;
    if (r != -1) return std::nullopt;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!co.has_edge(c[i], c[j])) return std::nullopt;
    r = static_cast<int>(c.size());
  }
  if (r < 2) return std::nullopt;
  return std::make_pair(r, g.order() - r);
}

inline std::optional<std::vector<int>> as_spider(const Graph& g) {
  if (g.edge_count() != g.order() - 1 || !is_connected(g))
    return std::nullopt;
  int center = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (center != -1) return std::nullopt;
      center = v;
    }
  }
  if (center == -1) return std::nullopt;
  std::vector<int> legs;
  for (int start : g.neighbors(center)) {
    int len = 1, prev = center, cur = start;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  return legs;
}

/// Verifies the hypercube structure by coordinate assignment: label each
/// vertex with the set of root neighbors that lie on a shortest path back
/// to the root, then check that edges are exactly the Hamming-one pairs.
inline std::optional<int> as_hypercube(const Graph& g) {
  int n = g.order();
  int d = 0;
  while ((1 << d) < n) ++d;
  if ((1 << d) != n || d < 1 || d > 20) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != d) return std::nullopt;

  auto bfs = [&](int src) {
    std::vector<int> dist(n, -1);
    std::vector<int> order{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (int w : g.neighbors(order[h]))
        if (dist[w] == -1) {
          dist[w] = dist[order[h]] + 1;
          order.push_back(w);
        }
    return dist;
  };
  auto dist0 = bfs(0);
  for (int v = 0; v < n; ++v)
    if (dist0[v] == -1) return std::nullopt;

  const auto& axes = g.neighbors(0);
  std::vector<std::vector<int>> axis_dist;
  for (int a : axes) axis_dist.push_back(bfs(a));

  std::vector<unsigned> code(n, 0);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (axis_dist[b][v] == dist0[v] - 1) code[v] |= 1u << b;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (code[v] >= static_cast<unsigned>(n) || seen[code[v]]) return std::nullopt;
    seen[code[v]] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      unsigned x = code[u] ^ code[v];
      bool hamming1 = x && !(x & (x - 1));
      if (hamming1 != g.has_edge(u, v)) return std::nullopt;
    }
  return d;
}

}  // namespace detail

inline std::vector<RecognizedFamily> recognize_families(const Graph& g) {
  std::vector<RecognizedFamily> out;
  int n = g.order();
  if (g.edge_count() == 0) out.push_back({"empty", {n}});
  if (detail::is_path_graph(g) && n >= 2) out.push_back({"path", {n}});
  if (detail::is_cycle_graph(g)) out.push_back({"cycle", {n}});
  if (detail::is_complete_graph(g) && n >= 2) out.push_back({"complete", {n}});
  if (auto mn = detail::as_complete_bipartite(g))
    out.push_back({"kmn", {mn->first, mn->second}});
  if (auto r = detail::as_balanced_tripartite(g))
    out.push_back({"krrr", {*r}});
  if (auto w = detail::as_wheel(g)) out.push_back({"wheel", {*w}});
  if (auto rs = detail::as_complete_split(g))
    out.push_back({"split", {rs->first, rs->second}});
  if (auto legs = detail::as_spider(g)) out.push_back({"spider", *legs});
  if (auto d = detail::as_hypercube(g)) out.push_back({"hypercube", {*d}});

  if (n == 4 && g.edge_count() == 5) out.push_back({"diamond", {}});
  if (n == 4 && g.edge_count() == 4) {
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    if (degs == std::vector<int>{1, 2, 2, 3}) out.push_back({"paw", {}});
  }
  {
    auto comps = components(g);
    if (comps.size() == 2) {
      bool all_complete = true;
      std::vector<int> sizes;
      for (const auto& c : comps) {
        auto sub = induced_subgraph(g, c);
        if (!detail::is_complete_graph(sub)) all_complete = false;
        sizes.push_back(sub.order());
      }
      std::sort(sizes.begin(), sizes.end());
      if (all_complete)
        out.push_back({"union2_complete", sizes});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer expression evaluator for the catalog's value formulas.

namespace detail {

class CatalogExpr {
 public:
  CatalogExpr(const std::string& text,
              const std::map<std::string, std::int64_t>& env)
      : s_(text), env_(env) {}

  std::int64_t eval() {
    auto v = or_expr();
    skip();
    if (at_ < s_.size())
      throw ParseError("trailing characters in catalog expression", at_);
    return v;
  }

 private:
  void skip() {
    while (at_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[at_]))) ++at_;
  }
  bool eat(const char* kw) {
    skip();
    std::size_t len = std::string(kw).size();
    if (s_.compare(at_, len, kw) == 0) {
      // keywords must not run into identifier characters
      if (std::isalpha(static_cast<unsigned char>(kw[0]))) {
        char next = at_ + len < s_.size() ? s_[at_ + len] : ' ';
        if (std::isalnum(static_cast<unsigned char>(next)) || next == '_')
          return false;
      }
      at_ += len;
      return true;
    }
    return false;
  }

  std::int64_t or_expr() {
    auto v = and_expr();
    while (eat("or")) v = (v != 0) | (and_expr() != 0);
    return v;
  }
  std::int64_t and_expr() {
    auto v = cmp();
    while (eat("and")) {
      auto w = cmp();
      v = (v != 0) & (w != 0);
    }
    return v;
  }
  std::int64_t cmp() {
    auto v = sum();
    skip();
    if (eat("==")) return v == sum();
    if (eat("!=")) return v != sum();
    if (eat("<=")) return v <= sum();
    if (eat(">=")) return v >= sum();
    if (eat("<")) return v < sum();
    if (eat(">")) return v > sum();
    return v;
  }
  std::int64_t sum() {
    auto v = term();
    while (true) {
      skip();
      if (eat("+")) v += term();
      else if (at_ < s_.size() && s_[at_] == '-' &&
               (at_ + 1 >= s_.size() || s_[at_ + 1] != '-')) {
        ++at_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  std::int64_t term() {
    auto v = unary();
    while (eat("*")) v *= unary();
    return v;
  }
  std::int64_t unary() {
    skip();
    if (eat("-")) return -unary();
    return atom();
  }
  std::int64_t atom() {
    skip();
    if (at_ >= s_.size()) throw ParseError("catalog expression ended early", at_);
    char c = s_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (at_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[at_])))
        v = v * 10 + (s_[at_++] - '0');
      return v;
    }
    if (c == '(') {
      ++at_;
      auto v = or_expr();
      skip();
      if (at_ >= s_.size() || s_[at_] != ')')
        throw ParseError("missing ) in catalog expression", at_);
      ++at_;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = at_;
      while (at_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[at_])) || s_[at_] == '_'))
        ++at_;
      std::string name = s_.substr(start, at_ - start);
      skip();
      if (at_ < s_.size() && s_[at_] == '(') {
        ++at_;
        std::vector<std::int64_t> args;
        skip();
        if (at_ < s_.size() && s_[at_] == ')') {
          ++at_;
        } else {
          while (true) {
            args.push_back(or_expr());
            skip();
            if (at_ < s_.size() && s_[at_] == ',') {
              ++at_;
              continue;
            }
            if (at_ < s_.size() && s_[at_] == ')') {
              ++at_;
              break;
            }
            throw ParseError("bad argument list in catalog expression", at_);
          }
        }
        return call(name, args, start);
      }
      auto it = env_.find(name);
      if (it == env_.end())
        throw ParseError("unknown catalog parameter '" + name + "'", start);
      return it->second;
    }
    throw ParseError("unexpected character in catalog expression", at_);
  }

  std::int64_t call(const std::string& f, const std::vector<std::int64_t>& a,
                    std::size_t at) {
    auto need = [&](std::size_t k) {
      if (a.size() != k)
        throw ParseError("wrong arity for " + f + " in catalog expression", at);
    };
    if (f == "if") {
      need(3);
      return a[0] != 0 ? a[1] : a[2];
    }
    if (f == "floordiv") {
      need(2);
      if (a[1] == 0) throw ParseError("floordiv by zero", at);
      std::int64_t q = a[0] / a[1], r = a[0] % a[1];
      return (r != 0 && ((r < 0) != (a[1] < 0))) ? q - 1 : q;
    }
    if (f == "ceildiv") {
      need(2);
      if (a[1] == 0) throw ParseError("ceildiv by zero", at);
      std::int64_t q = a[0] / a[1], r = a[0] % a[1];
      return (r != 0 && ((r < 0) == (a[1] < 0))) ? q + 1 : q;
    }
    if (f == "mod") {
      need(2);
      if (a[1] == 0) throw ParseError("mod by zero", at);
      std::int64_t m = a[0] % a[1];
      return m < 0 ? m + std::abs(a[1]) : m;
    }
    if (f == "min") {
      need(2);
      return std::min(a[0], a[1]);
    }
    if (f == "max") {
      need(2);
      return std::max(a[0], a[1]);
    }
    if (f == "abs") {
      need(1);
      return std::abs(a[0]);
    }
    if (f == "odd") {
      need(1);
      return std::abs(a[0] % 2);
    }
    if (f == "even") {
      need(1);
      return a[0] % 2 == 0;
    }
    if (f == "pow2") {
      need(1);
      if (a[0] < 0 || a[0] > 40) throw ParseError("pow2 out of range", at);
      return static_cast<std::int64_t>(1) << a[0];
    }
    throw ParseError("unknown catalog function '" + f + "'", at);
  }

  const std::string& s_;
  const std::map<std::string, std::int64_t>& env_;
  std::size_t at_ = 0;
};

inline std::int64_t eval_expr(const std::string& text,
                              const std::map<std::string, std::int64_t>& env) {
  return CatalogExpr(text, env).eval();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog records and lookup

/// Closed-form values for one recognized family instance.  Exact values
/// are stored as a collapsed bracket; every record carries its anchors.
struct CatalogBracket {
  std::optional<int> lo, hi;
  bool exact() const { return lo && hi && *lo == *hi; }
  std::string str() const {
    if (!lo && !hi) return "?";
    if (exact()) return std::to_string(*lo);
    std::string s = "[";
    s += lo ? std::to_string(*lo) : "-inf";
    s += ", ";
    s += hi ? std::to_string(*hi) : "+inf";
    return s + "]";
  }
};

struct CatalogEntry {
  std::string name;
  std::string match_key;
  std::vector<int> params;
  std::map<std::string, CatalogBracket> values;  // q0, M0, MM0, MR0, mr0, M_plus
  std::vector<OrderedMultiplicityList> oml_set;
  bool oml_set_exact = false;
  std::vector<OrderedMultiplicityList> unrestricted_oml_set;  // exact, no
                                                              // hollow
                                                              // restriction
  std::string spectra_law;
  std::vector<std::string> anchors;
  std::vector<std::string> notes;

  std::optional<int> exact(const std::string& field) const {
    auto it = values.find(field);
    if (it == values.end() || !it->second.exact()) return std::nullopt;
    return it->second.lo;
  }
};

namespace detail {

struct CatalogRecord {
  std::string name;
  std::string match_key;
  std::vector<std::string> param_names;
  std::string when;
  std::vector<std::pair<std::string, std::string>> fields;  // key, raw value
};

inline std::vector<CatalogRecord> parse_catalog_text(const std::string& text) {
  std::vector<CatalogRecord> records;
  CatalogRecord cur;
  bool open = false;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    ++lineno;
    pos = eol + 1;
    if (pos > text.size() + 1) break;

    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') {
      if (pos > text.size()) break;
      continue;
    }
    std::string body = line.substr(first);
    if (body.rfind("[entry]", 0) == 0) {
      if (open) records.push_back(cur);
      cur = CatalogRecord{};
      cur.name = body.substr(7);
      auto ns = cur.name.find_first_not_of(" \t");
      cur.name = ns == std::string::npos ? "" : cur.name.substr(ns);
      open = true;
    } else {
      auto colon = body.find(':');
      if (colon == std::string::npos || !open)
        throw ParseError("catalog line " + std::to_string(lineno) +
                             " is not key: value",
                         pos);
      std::string key = body.substr(0, colon);
      std::string value = body.substr(colon + 1);
      auto vs = value.find_first_not_of(" \t");
      value = vs == std::string::npos ? "" : value.substr(vs);
      while (!value.empty() && (value.back() == ' ' || value.back() == '\r'))
        value.pop_back();
      if (key == "match") {
        auto mcolon = value.find(':');
        cur.match_key = value.substr(0, mcolon);
        if (mcolon != std::string::npos) {
          std::size_t p = mcolon + 1;
          while (p <= value.size()) {
            auto comma = value.find(',', p);
            if (comma == std::string::npos) comma = value.size();
            cur.param_names.push_back(value.substr(p, comma - p));
            p = comma + 1;
          }
        }
      } else if (key == "when") {
        cur.when = value;
      } else {
        cur.fields.push_back({key, value});
      }
    }
    if (pos > text.size()) break;
  }
  if (open) records.push_back(cur);
  return records;
}

inline const std::vector<CatalogRecord>& catalog_records() {
  static const std::vector<CatalogRecord> records =
      parse_catalog_text(kCatalogText);
  return records;
}

inline std::vector<OrderedMultiplicityList> parse_oml_set(
    const std::string& text, const std::map<std::string, std::int64_t>& env) {
  std::vector<OrderedMultiplicityList> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string::npos) bar = text.size();
    std::string item = text.substr(pos, bar - pos);
    pos = bar + 1;
    auto l = item.find_first_not_of(" \t");
    auto r = item.find_last_not_of(" \t");
    if (l == std::string::npos) continue;
    item = item.substr(l, r - l + 1);
    OrderedMultiplicityList oml;
    if (item.rfind("ones(", 0) == 0 && item.back() == ')') {
      auto n = eval_expr(item.substr(5, item.size() - 6), env);
      oml.m.assign(static_cast<std::size_t>(n), 1);
    } else {
      if (item.size() < 3 || item.front() != '(' || item.back() != ')')
        throw ParseError("multiplicity list must be parenthesized", 0);
      std::string inner = item.substr(1, item.size() - 2);
      std::size_t p = 0;
      while (p <= inner.size()) {
        auto comma = inner.find(',', p);
        if (comma == std::string::npos) comma = inner.size();
        oml.m.push_back(static_cast<int>(
            eval_expr(inner.substr(p, comma - p), env)));
        p = comma + 1;
        if (comma == inner.size()) break;
      }
    }
    out.push_back(std::move(oml));
  }
  return out;
}

}  // namespace detail

/// All catalog records matching the graph's recognized families, with
/// formulas evaluated at the instance parameters.
inline std::vector<CatalogEntry> catalog_lookup(const Graph& g) {
  std::vector<CatalogEntry> out;
  auto families = recognize_families(g);
  for (const auto& record : detail::catalog_records()) {
    for (const auto& fam : families) {
      if (fam.key != record.match_key) continue;
      if (record.param_names.size() != fam.params.size()) continue;
      std::map<std::string, std::int64_t> env;
      for (std::size_t i = 0; i < fam.params.size(); ++i)
        env[record.param_names[i]] = fam.params[i];
      if (!record.when.empty() && detail::eval_expr(record.when, env) == 0)
        continue;

      CatalogEntry entry;
      entry.name = record.name;
      entry.match_key = fam.key;
      entry.params = fam.params;
      for (const auto& [key, raw] : record.fields) {
        if (key == "anchor") {
          entry.anchors.push_back(raw);
        } else if (key == "note") {
          entry.notes.push_back(raw);
        } else if (key == "spectra_law") {
          entry.spectra_law = raw;
        } else if (key == "oml_set" || key == "oml_set_contains") {
          entry.oml_set = detail::parse_oml_set(raw, env);
          entry.oml_set_exact = key == "oml_set";
        } else if (key == "unrestricted_oml_set") {
          entry.unrestricted_oml_set = detail::parse_oml_set(raw, env);
        } else {
          std::string field = key;
          bool lo = true, hi = true;
          if (field.size() > 3 && field.rfind("_lo") == field.size() - 3) {
            field = field.substr(0, field.size() - 3);
            hi = false;
          } else if (field.size() > 3 && field.rfind("_hi") == field.size() - 3) {
            field = field.substr(0, field.size() - 3);
            lo = false;
          }
          int v = static_cast<int>(detail::eval_expr(raw, env));
          auto& bracket = entry.values[field];
          if (lo) bracket.lo = v;
          if (hi) bracket.hi = v;
        }
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

/// Best exact value of a field over all matching entries (they must agree).
inline std::optional<int> catalog_exact(const Graph& g,
                                        const std::string& field) {
  std::optional<int> best;
  for (const auto& entry : catalog_lookup(g)) {
    auto v = entry.exact(field);
    if (!v) continue;
    if (best && *best != *v)
      throw Error("catalog entries disagree on " + field);
    best = v;
  }
  return best;
}

/// Tightest bracket of a field over all matching entries.
inline CatalogBracket catalog_bracket(const Graph& g,
                                      const std::string& field) {
  CatalogBracket out;
  for (const auto& entry : catalog_lookup(g)) {
    auto it = entry.values.find(field);
    if (it == entry.values.end()) continue;
    if (it->second.lo && (!out.lo || *it->second.lo > *out.lo))
      out.lo = it->second.lo;
    if (it->second.hi && (!out.hi || *it->second.hi < *out.hi))
      out.hi = it->second.hi;
  }
  return out;
}

}  // namespace hollow
