#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hollow/rational.hpp"
#include "hollow/spectrum.hpp"

namespace hollow {

/// A requested spectrum: strictly increasing values with multiplicities.
/// Values parsed from exact literals (integers, finite decimals, a/b)
/// carry a rational shadow so feasibility checks can be exact.
class TargetSpectrum {
 public:
  /// Whether zeros in the target are literal eigenvalues (the default) or
  /// placeholders the search may move.
  enum class ZeroMode { exact, free };

  TargetSpectrum() = default;

  static TargetSpectrum from_values(std::vector<double> flat,
                                    ZeroMode mode = ZeroMode::exact) {
    std::sort(flat.begin(), flat.end());
    TargetSpectrum t;
    t.zero_mode_ = mode;
    for (double x : flat) {
      if (!t.values_.empty() && t.values_.back().first == x)
        ++t.values_.back().second;
      else
        t.values_.push_back({x, 1});
    }
    t.exact_.assign(t.values_.size(), std::nullopt);
    for (std::size_t i = 0; i < t.values_.size(); ++i)
      t.exact_[i] = to_exact(t.values_[i].first);
    return t;
  }

  static TargetSpectrum from_pairs(std::vector<std::pair<double, int>> pairs,
                                   ZeroMode mode = ZeroMode::exact) {
    std::vector<double> flat;
    for (auto [v, m] : pairs) {
      if (m < 1) throw ParameterError("multiplicities must be positive");
      for (int i = 0; i < m; ++i) flat.push_back(v);
    }
    return from_values(std::move(flat), mode);
  }

  static TargetSpectrum from_rationals(
      std::vector<std::pair<Rat, int>> pairs,
      ZeroMode mode = ZeroMode::exact) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    TargetSpectrum t;
    t.zero_mode_ = mode;
    for (auto& [v, m] : pairs) {
      if (m < 1) throw ParameterError("multiplicities must be positive");
      if (!t.values_.empty() && t.exact_.back() && *t.exact_.back() == v) {
        t.values_.back().second += m;
      } else {
        t.values_.push_back({v.to_double(), m});
        t.exact_.push_back(v);
      }
    }
    return t;
  }

  const std::vector<std::pair<double, int>>& values() const { return values_; }
  const std::optional<Rat>& exact(std::size_t i) const { return exact_[i]; }
  bool all_exact() const {
    for (auto& e : exact_)
      if (!e) return false;
    return true;
  }
  ZeroMode zero_mode() const { return zero_mode_; }

  int total() const {
    int s = 0;
    for (auto& [v, m] : values_) s += m;
    return s;
  }
  int distinct() const { return static_cast<int>(values_.size()); }
  double max_abs() const {
    double r = 0.0;
    for (auto& [v, m] : values_) r = std::max(r, std::abs(v));
    return r;
  }
  OrderedMultiplicityList oml() const {
    OrderedMultiplicityList l;
    for (auto& [v, m] : values_) l.m.push_back(m);
    return l;
  }
  std::vector<double> expanded() const {
    std::vector<double> flat;
    for (auto& [v, m] : values_)
      for (int i = 0; i < m; ++i) flat.push_back(v);
    return flat;
  }

  /// Exact when every value has a rational shadow; otherwise within
  /// tol * (1 + largest magnitude).
  bool trace_is_zero(double tol = 1e-12) const {
    if (all_exact()) {
      Rat sum;
      for (std::size_t i = 0; i < values_.size(); ++i)
        sum = sum + *exact_[i] * Rat(values_[i].second);
      return sum.is_zero();
    }
    double sum = 0.0;
    for (auto& [v, m] : values_) sum += v * m;
    return std::abs(sum) <= tol * (1.0 + max_abs());
  }

  /// Multiset symmetry about the origin.
  bool is_symmetric(double tol = 1e-12) const {
    std::size_t q = values_.size();
    for (std::size_t i = 0; i < q; ++i) {
      const auto& [v, m] = values_[i];
      const auto& [w, k] = values_[q - 1 - i];
      if (m != k) return false;
      if (all_exact()) {
        if (!((*exact_[i] + *exact_[q - 1 - i]).is_zero())) return false;
      } else if (std::abs(v + w) > tol * (1.0 + max_abs())) {
        return false;
      }
    }
    return true;
  }

  int zero_multiplicity(double tol = 1e-12) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (all_exact() ? exact_[i]->is_zero()
                      : std::abs(values_[i].first) <= tol * (1.0 + max_abs()))
        return values_[i].second;
    }
    return 0;
  }

  int nonzero_count(double tol = 1e-12) const {
    return total() - zero_multiplicity(tol);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += exact_[i] ? exact_[i]->str() : format_double(values_[i].first);
      if (values_[i].second > 1) s += "^" + std::to_string(values_[i].second);
    }
    return s;
  }

 private:
  static std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }

  // integers and dyadic-exact decimals get a rational shadow
  static std::optional<Rat> to_exact(double x) {
    if (x == std::floor(x) && std::abs(x) < 1e15)
      return Rat(static_cast<std::int64_t>(x));
    for (std::int64_t den : {2LL, 4LL, 8LL, 16LL, 5LL, 10LL, 20LL, 100LL,
                             1000LL, 3LL, 6LL, 12LL}) {
      double scaled = x * static_cast<double>(den);
      if (scaled == std::floor(scaled) && std::abs(scaled) < 1e15) {
        Rat r(static_cast<std::int64_t>(scaled), den);
        if (r.to_double() == x) return r;
      }
    }
    return std::nullopt;
  }

  std::vector<std::pair<double, int>> values_;
  std::vector<std::optional<Rat>> exact_;
  ZeroMode zero_mode_ = ZeroMode::exact;
};

// ---------------------------------------------------------------------------
// Literals: "-2,-1,1,2", "-2^2,0,2^2", fractions "3/2", decimals "0.5".

namespace detail {

inline Rat parse_rat(const std::string& text, std::size_t from,
                     std::size_t to) {
  if (from >= to) throw ParseError("empty number", from);
  bool neg = false;
  std::size_t i = from;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  std::int64_t num = 0, den = 1;
  bool digits = false, frac = false, slash = false;
  for (; i < to; ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (frac) den *= 10;
      digits = true;
      if (num > (std::int64_t)4e17 || den > (std::int64_t)4e17)
        throw ParseError("number literal too large", i);
    } else if (c == '.' && !frac && !slash) {
      frac = true;
    } else if (c == '/' && !frac && !slash && digits) {
      slash = true;
      std::int64_t d = 0;
      for (++i; i < to; ++i) {
        if (text[i] < '0' || text[i] > '9')
          throw ParseError("bad denominator", i);
        d = d * 10 + (text[i] - '0');
        if (d > (std::int64_t)4e17) throw ParseError("denominator too large", i);
      }
      if (d == 0) throw ParseError("zero denominator", to - 1);
      den = d;
      break;
    } else {
      throw ParseError("unexpected character in number", i);
    }
  }
  if (!digits) throw ParseError("number has no digits", from);
  return Rat(neg ? -num : num, den);
}

}  // namespace detail

/// Comma-separated values with optional ^k multiplicity suffixes.
inline TargetSpectrum parse_spectrum_literal(const std::string& text) {
  if (text.empty()) throw ParseError("empty spectrum literal", 0);
  std::vector<std::pair<Rat, int>> pairs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::size_t caret = text.find('^', pos);
    std::size_t vend = (caret != std::string::npos && caret < next) ? caret : next;
    Rat v = detail::parse_rat(text, pos, vend);
    int mult = 1;
    if (vend != next) {
      mult = 0;
      for (std::size_t i = vend + 1; i < next; ++i) {
        if (text[i] < '0' || text[i] > '9')
          throw ParseError("bad multiplicity suffix", i);
        mult = mult * 10 + (text[i] - '0');
        if (mult > 10000) throw ParseError("multiplicity too large", i);
      }
      if (mult == 0) throw ParseError("multiplicity must be positive", vend + 1);
    }
    pairs.push_back({v, mult});
    if (next == text.size()) break;
    pos = next + 1;
    if (pos == text.size()) throw ParseError("trailing comma", next);
  }
  return TargetSpectrum::from_rationals(std::move(pairs));
}

inline OrderedMultiplicityList parse_oml_literal(const std::string& text) {
  if (text.empty()) throw ParseError("empty multiplicity list", 0);
  OrderedMultiplicityList l;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    if (next == pos) throw ParseError("empty multiplicity entry", pos);
    int m = 0;
    for (std::size_t i = pos; i < next; ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("multiplicity must be a positive integer", i);
      m = m * 10 + (text[i] - '0');
      if (m > 10000) throw ParseError("multiplicity too large", i);
    }
    if (m == 0) throw ParseError("multiplicity must be positive", pos);
    l.m.push_back(m);
    if (next == text.size()) break;
    pos = next + 1;
    if (pos == text.size()) throw ParseError("trailing comma", next);
  }
  return l;
}

inline std::string print_oml_literal(const OrderedMultiplicityList& l) {
  std::string s;
  for (std::size_t i = 0; i < l.m.size(); ++i)
    s += (i ? "," : "") + std::to_string(l.m[i]);
  return s;
}

}  // namespace hollow
