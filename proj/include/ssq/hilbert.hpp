#pragma once

// h-vectors and Hilbert series of K[W] for a strongly stable quadratic set W.
//
// The numerator is computed three independent ways: a path DP over the
// diagram, an antichain DP over the diagram minus its top row, and explicit
// path enumeration. direct_hf counts monomials in W^i by brute force.

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "ssq/bigint.hpp"
#include "ssq/core.hpp"
#include "ssq/errors.hpp"

namespace ssq {

inline constexpr std::uint64_t kDefaultWorkCap = 10'000'000;

/// (h_0, ..., h_k) with trailing zeros stripped.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  }
  HVector(std::initializer_list<long long> entries)
      : HVector(std::vector<BigInt>(entries.begin(), entries.end())) {}

  /// k; -1 for the zero vector.
  int degree() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }

  /// h_i, zero outside 0..k.
  BigInt at(long long i) const {
    if (i < 0 || i >= static_cast<long long>(entries_.size())) return 0;
    return entries_[static_cast<std::size_t>(i)];
  }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  BigInt sum() const {
    BigInt total = 0;
    for (const auto& e : entries_) total += e;
    return total;
  }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend bool operator<(const HVector& a, const HVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<BigInt> entries_;
};

/// "(1, 7, 5)"
inline std::string to_string(const HVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? ", " : "") + h[i].str();
  return out + ")";
}

/// numerator(t) / (1 - t)^denom_power
struct HilbertSeries {
  HVector numerator;
  int denom_power = 0;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// "(1 + 7t + 5t^2)/(1-t)^6"
inline std::string to_string(const HilbertSeries& s) {
  std::string num;
  for (std::size_t i = 0; i < s.numerator.size(); ++i) {
    const auto& c = s.numerator[i];
    if (c == 0) continue;
    if (!num.empty()) num += " + ";
    if (i == 0 || c != 1) num += c.str();
    if (i >= 1) num += "t";
    if (i >= 2) num += "^" + std::to_string(i);
  }
  if (num.empty()) num = "0";
  return "(" + num + ")/(1-t)^" + std::to_string(s.denom_power);
}

/// A maximal NE-path: from a diagonal box (i, i) to (1, n), each step going
/// north (row - 1) or east (column + 1).
struct NEPath {
  std::vector<Monomial> boxes;

  /// 'N'/'E' per step.
  std::string steps() const {
    std::string out;
    for (std::size_t s = 1; s < boxes.size(); ++s) out += boxes[s].i < boxes[s - 1].i ? 'N' : 'E';
    return out;
  }

  /// Number of maximal runs of N steps.
  int north_parts() const {
    int parts = 0;
    char prev = 'E';
    for (char c : steps()) {
      if (c == 'N' && prev != 'N') ++parts;
      prev = c;
    }
    return parts;
  }

  friend bool operator==(const NEPath&, const NEPath&) = default;
};

/// "x_2^2-x_1x_2-x_1x_3"
inline std::string to_string(const NEPath& p) {
  std::string out;
  for (std::size_t s = 0; s < p.boxes.size(); ++s) out += (s ? "-" : "") + to_string(p.boxes[s]);
  return out;
}

/// h_i = number of maximal NE-paths with i maximal N-parts.
///
/// Column-major sweep; each box keeps two generating polynomials in t, split
/// by how the path entered the box: `open` (path start or E step) and `north`
/// (N step). An N step out of an open state starts a new N-part.
inline HVector hvector_dp(const Diagram& d) {
  const int n = d.dimension();
  const int rows = d.row_count();
  // Indexed [row][col], 1-based; only boxes of d are touched.
  std::vector<std::vector<Poly>> open(rows + 2, std::vector<Poly>(n + 1));
  std::vector<std::vector<Poly>> north(rows + 2, std::vector<Poly>(n + 1));
  for (int col = 1; col <= n; ++col) {
    for (int row = std::min(col, rows); row >= 1; --row) {
      if (col > d.bound(row)) continue;
      Poly& o = open[row][col];
      Poly& nn = north[row][col];
      if (row == col) add_into(o, Poly{1});
      if (col - 1 >= row) {
        add_into(o, open[row][col - 1]);
        add_into(o, north[row][col - 1]);
      }
      if (row + 1 <= col && row + 1 <= rows && col <= d.bound(row + 1)) {
        add_into(nn, open[row + 1][col], 1);
        add_into(nn, north[row + 1][col]);
      }
    }
  }
  Poly total = open[1][n];
  add_into(total, north[1][n]);
  return HVector(std::move(total));
}

/// All maximal NE-paths, ordered by start row, then step word with N < E.
/// Throws WorkCapExceeded when the path count exceeds `cap`.
inline std::vector<NEPath> enumerate_paths(const Diagram& d, std::uint64_t cap = kDefaultWorkCap) {
  const BigInt predicted = hvector_dp(d).sum();
  if (predicted > cap)
    throw WorkCapExceeded("path enumeration would produce " + predicted.str() + " paths (cap " +
                          std::to_string(cap) + ")");
  std::vector<NEPath> out;
  out.reserve(static_cast<std::size_t>(predicted));
  const int n = d.dimension();
  NEPath current;
  auto walk = [&](auto& self, int row, int col) -> void {
    current.boxes.emplace_back(row, col);
    if (row == 1 && col == n) {
      out.push_back(current);
    } else {
      if (row > 1) self(self, row - 1, col);
      if (col < d.bound(row)) self(self, row, col + 1);
    }
    current.boxes.pop_back();
  };
  for (int start = 1; start <= d.row_count(); ++start) walk(walk, start, start);
  return out;
}

/// Histogram of north_parts() over a set of paths.
inline HVector path_histogram(const std::vector<NEPath>& paths) {
  std::vector<BigInt> counts;
  for (const auto& p : paths) {
    const auto parts = static_cast<std::size_t>(p.north_parts());
    if (counts.size() <= parts) counts.resize(parts + 1);
    counts[parts] += 1;
  }
  return HVector(std::move(counts));
}

/// h_i = number of antichains of size i among the boxes below row 1.
///
/// Two boxes in different rows are incomparable exactly when the lower row
/// has the smaller column, so an antichain is a choice of boxes in distinct
/// rows with columns strictly decreasing downwards. Rows are swept top-down;
/// ending[c] counts antichains whose lowest box sits in column c.
inline HVector antichain_counts(const Diagram& d) {
  const int n = d.dimension();
  std::vector<Poly> ending(n + 2);
  for (int row = 2; row <= d.row_count(); ++row) {
    // above[c] = 1 + sum of ending[c'] for c' > c, from rows strictly above.
    std::vector<Poly> above(n + 2);
    Poly running{1};
    for (int col = n; col >= row; --col) {
      above[col] = running;
      add_into(running, ending[col]);
    }
    for (int col = row; col <= d.bound(row); ++col) add_into(ending[col], above[col], 1);
  }
  Poly total{1};
  for (const auto& p : ending) add_into(total, p);
  return HVector(std::move(total));
}

/// h(t)/(1-t)^n; the path DP and antichain DP must agree.
inline HilbertSeries hilbert_series(const Diagram& d) {
  HVector by_paths = hvector_dp(d);
  const HVector by_antichains = antichain_counts(d);
  if (by_paths != by_antichains)
    throw InternalInconsistency("path DP " + to_string(by_paths) + " disagrees with antichain count " +
                                to_string(by_antichains) + " for bounds " + format_bounds(d));
  return {std::move(by_paths), d.dimension()};
}

/// Coefficients of t^0..t^upto of the power series expansion.
inline std::vector<BigInt> expand(const HilbertSeries& s, int upto) {
  std::vector<BigInt> out;
  const int n = s.denom_power;
  for (int i = 0; i <= upto; ++i) {
    BigInt coef = 0;
    for (int j = 0; j <= i && j <= s.numerator.degree(); ++j) {
      if (n == 0)
        coef += (i == j) ? s.numerator[static_cast<std::size_t>(j)] : BigInt(0);
      else
        coef += s.numerator[static_cast<std::size_t>(j)] * binomial(i - j + n - 1, n - 1);
    }
    out.push_back(std::move(coef));
  }
  return out;
}

/// dim span W^i: distinct exponent vectors that are sums of i box exponents.
inline BigInt direct_hf(const Diagram& d, int i, std::uint64_t cap = kDefaultWorkCap) {
  using Exponent = std::vector<std::uint16_t>;
  if (i < 0) throw std::invalid_argument("degree must be nonnegative");
  if (i > std::numeric_limits<std::uint16_t>::max() / 2) throw std::invalid_argument("degree too large");
  const auto n = static_cast<std::size_t>(d.dimension());
  const auto boxes = d.boxes();
  std::set<Exponent> level{Exponent(n, 0)};
  for (int step = 0; step < i; ++step) {
    std::set<Exponent> next;
    for (const auto& e : level) {
      for (const auto& m : boxes) {
        Exponent f = e;
        ++f[static_cast<std::size_t>(m.i - 1)];
        ++f[static_cast<std::size_t>(m.j - 1)];
        next.insert(std::move(f));
        if (next.size() > cap)
          throw WorkCapExceeded("direct Hilbert function exceeded " + std::to_string(cap) +
                                " exponent vectors at degree " + std::to_string(step + 1));
      }
    }
    level = std::move(next);
  }
  return BigInt(level.size());
}

}  // namespace ssq
