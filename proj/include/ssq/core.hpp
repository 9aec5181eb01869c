#pragma once

// Quadratic monomials and strongly stable sets of them, stored as shifted
// Ferrers diagrams. Box (i, j) with i <= j is the monomial x_i x_j; all
// indices are 1-based.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssq/errors.hpp"

namespace ssq {

struct Monomial {
  int i = 1;
  int j = 1;

  constexpr Monomial() = default;
  /// The pair is sorted, so Monomial(4, 3) == Monomial(3, 4).
  constexpr Monomial(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  constexpr bool is_square() const { return i == j; }

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// "x_3x_4", "x_5^2"; indices above 9 are braced as in "x_3x_{10}".
inline std::string to_string(Monomial m) {
  auto var = [](int v) {
    std::string idx = std::to_string(v);
    return idx.size() > 1 ? "x_{" + idx + "}" : "x_" + idx;
  };
  if (m.is_square()) return var(m.i) + "^2";
  return var(m.i) + var(m.j);
}

/// A nonempty strongly stable set of quadratic monomials.
///
/// Stored as column bounds c_1..c_n: row i holds columns i..c_i, and
/// c_i = i - 1 marks an empty row. Row 1 is always full (c_1 = n), the
/// nonempty rows form a prefix, and their bounds weakly decrease.
class Diagram {
 public:
  /// Validates the bound vector; throws std::invalid_argument if it does not
  /// describe a diagram.
  static Diagram from_bounds(std::vector<int> bounds) {
    const int n = static_cast<int>(bounds.size());
    if (n < 1) throw std::invalid_argument("diagram must have at least one column");
    if (bounds[0] != n)
      throw std::invalid_argument("row 1 must span all " + std::to_string(n) + " columns");
    bool empty_seen = false;
    for (int row = 2; row <= n; ++row) {
      const int c = bounds[row - 1];
      if (c == row - 1) {
        empty_seen = true;
        continue;
      }
      if (empty_seen || c < row || c > bounds[row - 2])
        throw std::invalid_argument("bound of row " + std::to_string(row) + " breaks strong stability");
    }
    return Diagram(std::move(bounds));
  }

  int dimension() const { return static_cast<int>(bounds_.size()); }

  /// Column bound of a row; rows past the dimension are empty.
  int bound(int row) const { return row <= dimension() ? bounds_[row - 1] : row - 1; }

  bool row_empty(int row) const { return bound(row) < row; }

  int row_count() const {
    int rows = 0;
    while (rows < dimension() && !row_empty(rows + 1)) ++rows;
    return rows;
  }

  bool contains(Monomial m) const { return m.i >= 1 && m.i <= dimension() && m.j <= bound(m.i); }

  std::size_t box_count() const {
    std::size_t total = 0;
    for (int row = 1; row <= row_count(); ++row) total += static_cast<std::size_t>(bound(row) - row + 1);
    return total;
  }

  /// Boxes in row-major order.
  std::vector<Monomial> boxes() const {
    std::vector<Monomial> out;
    out.reserve(box_count());
    for (int row = 1; row <= row_count(); ++row)
      for (int col = row; col <= bound(row); ++col) out.emplace_back(row, col);
    return out;
  }

  const std::vector<int>& bounds() const { return bounds_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) { return a.bounds_ <=> b.bounds_; }

 private:
  explicit Diagram(std::vector<int> bounds) : bounds_(std::move(bounds)) {}

  std::vector<int> bounds_;
};

/// st(gens): box (a, b) is present iff a <= i and b <= j for some generator (i, j).
inline Diagram closure(std::span<const Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  int n = 0;
  for (const auto& g : gens) {
    if (g.i < 1) throw std::invalid_argument("variable indices are 1-based");
    n = std::max(n, g.j);
  }
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) {
    int c = row - 1;
    for (const auto& g : gens)
      if (g.i >= row) c = std::max(c, g.j);
    bounds[row - 1] = c;
  }
  return Diagram::from_bounds(std::move(bounds));
}

inline Diagram closure(std::initializer_list<Monomial> gens) {
  return closure(std::span<const Monomial>(gens.begin(), gens.size()));
}

inline bool is_strongly_stable(const std::set<Monomial>& boxes) {
  for (const auto& m : boxes) {
    if (m.i >= 2 && !boxes.contains(Monomial(m.i - 1, m.j))) return false;
    if (m.j >= 2 && !boxes.contains(Monomial(m.i, m.j - 1))) return false;
  }
  return true;
}

/// Maximal boxes under the componentwise order, sorted by row.
inline std::vector<Monomial> borel_generators(const Diagram& d) {
  std::vector<Monomial> out;
  const int rows = d.row_count();
  for (int row = 1; row <= rows; ++row)
    if (row == rows || d.bound(row + 1) < d.bound(row)) out.emplace_back(row, d.bound(row));
  return out;
}

/// a is a subset of b.
inline bool is_subset(const Diagram& a, const Diagram& b) {
  if (a.dimension() > b.dimension()) return false;
  for (int row = 1; row <= a.dimension(); ++row)
    if (a.bound(row) > b.bound(row)) return false;
  return true;
}

inline Diagram diagram_union(const Diagram& a, const Diagram& b) {
  const int n = std::max(a.dimension(), b.dimension());
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) bounds[row - 1] = std::max(a.bound(row), b.bound(row));
  bounds[0] = n;
  return Diagram::from_bounds(std::move(bounds));
}

/// True when x_2 x_n belongs to the set, i.e. the last column has two boxes.
inline bool has_no_free_variable(const Diagram& d) {
  return d.dimension() >= 2 && d.bound(2) == d.dimension();
}

/// Trims row 1 to the last column used by row 2 (a single box if row 2 is empty).
inline Diagram normalize(const Diagram& d) {
  const int n = d.row_empty(2) ? 1 : d.bound(2);
  std::vector<int> bounds(d.bounds().begin(), d.bounds().begin() + n);
  bounds[0] = n;
  return Diagram::from_bounds(std::move(bounds));
}

/// Lengthens row 1 to `n` columns (n >= dimension); the remaining rows are kept.
inline Diagram extend_first_row(const Diagram& d, int n) {
  if (n < d.dimension()) throw std::invalid_argument("cannot extend row 1 to fewer columns");
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) bounds[row - 1] = d.bound(row);
  bounds[0] = n;
  return Diagram::from_bounds(std::move(bounds));
}

/// V_{2k} = st(x_{k+1}^2, x_k x_{k+2}, ..., x_2 x_{2k}).
inline Diagram v2k(int k) {
  if (k < 1) throw std::invalid_argument("v2k needs k >= 1");
  std::vector<Monomial> gens;
  for (int i = 2; i <= k + 1; ++i) gens.emplace_back(i, 2 * k + 2 - i);
  return closure(gens);
}

/// Boxes (a, b) of d on the anti-diagonal a + b = s, by increasing row.
inline std::vector<Monomial> diagonal_band(const Diagram& d, int s) {
  std::vector<Monomial> out;
  for (int row = 1; row <= d.row_count(); ++row) {
    const int col = s - row;
    if (col >= row && col <= d.bound(row)) out.emplace_back(row, col);
  }
  return out;
}

/// One line per row: "[]" per box, two spaces per column left of the diagonal.
inline std::string render_ascii(const Diagram& d) {
  std::string out;
  for (int row = 1; row <= d.row_count(); ++row) {
    out.append(static_cast<std::size_t>(2 * (row - 1)), ' ');
    for (int col = row; col <= d.bound(row); ++col) out += "[]";
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline int parse_index(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw ParseError("bad index '" + std::string(token) + "' in generators '" + std::string(whole) + "'");
  if (value < 1)
    throw ParseError("indices must be >= 1 in generators '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

/// Parses `i,j;i,j;...`. Pairs are sorted and duplicates dropped, keeping
/// first-occurrence order.
inline std::vector<Monomial> parse_generators(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty generator string");
  std::vector<Monomial> out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto pair = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    const auto comma = pair.find(',');
    if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("expected 'i,j' but got '" + std::string(detail::trim(pair)) + "'");
    const Monomial m(detail::parse_index(pair.substr(0, comma), text),
                     detail::parse_index(pair.substr(comma + 1), text));
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

/// Inverse of parse_generators: "3,4;2,6".
inline std::string format_generators(std::span<const Monomial> gens) {
  std::string out;
  for (const auto& m : gens) {
    if (!out.empty()) out += ';';
    out += std::to_string(m.i) + "," + std::to_string(m.j);
  }
  return out;
}

/// "st(x_3x_4, x_2x_6)", or "∅" for no generators.
inline std::string format_st(std::span<const Monomial> gens) {
  if (gens.empty()) return "\xE2\x88\x85";
  std::string out = "st(";
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (r) out += ", ";
    out += to_string(gens[r]);
  }
  return out + ")";
}

inline std::string format_bounds(const Diagram& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < d.bounds().size(); ++r) os << (r ? "," : "") << d.bounds()[r];
  os << ']';
  return os.str();
}

}  // namespace ssq
