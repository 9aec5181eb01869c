#pragma once

// Exhaustive surveys of no-free-variable diagrams, reproduction of the
// published table of Gorenstein algebras, and an audit of that table
// against the classifier.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ssq/appendix_data.hpp"
#include "ssq/core.hpp"
#include "ssq/errors.hpp"
#include "ssq/gorenstein.hpp"
#include "ssq/hilbert.hpp"

namespace ssq {

/// All diagrams of dimension n containing x_2 x_n, in lexicographic order of
/// their bound vectors. Throws WorkCapExceeded past `cap` diagrams.
inline std::vector<Diagram> enumerate_diagrams(int n, std::uint64_t cap = kDefaultWorkCap) {
  if (n < 2) throw std::invalid_argument("enumerate_diagrams needs n >= 2");
  std::vector<Diagram> out;
  std::vector<int> bounds(static_cast<std::size_t>(n));
  bounds[0] = bounds[1] = n;
  auto fill = [&](auto& self, int row) -> void {
    if (row > n) {
      if (out.size() >= cap)
        throw WorkCapExceeded("more than " + std::to_string(cap) + " diagrams of dimension " + std::to_string(n));
      out.push_back(Diagram::from_bounds(bounds));
      return;
    }
    const int prev = bounds[row - 2];
    // An empty row above forces this row empty too.
    const int hi = prev >= row - 1 ? prev : row - 1;
    for (int c = row - 1; c <= hi; ++c) {
      bounds[row - 1] = c;
      self(self, row + 1);
    }
  };
  fill(fill, 3);
  return out;
}

/// Uniform-ish random diagram of dimension n: each row bound is drawn
/// uniformly from the values the row above allows.
template <class Rng>
Diagram random_diagram(Rng& rng, int n) {
  if (n < 1) throw std::invalid_argument("random_diagram needs n >= 1");
  std::vector<int> bounds(static_cast<std::size_t>(n));
  bounds[0] = n;
  bool empty = false;
  for (int row = 2; row <= n; ++row) {
    if (empty) {
      bounds[row - 1] = row - 1;
      continue;
    }
    // Values row-1 (empty) and row..bounds[row-2].
    std::uniform_int_distribution<int> pick(row - 1, bounds[row - 2]);
    const int c = pick(rng);
    bounds[row - 1] = c;
    empty = c == row - 1;
  }
  return Diagram::from_bounds(std::move(bounds));
}

struct SurveyRow {
  Diagram diagram;
  /// Borel generators of the diagram.
  std::vector<Monomial> generators;
  /// Borel generators outside V_{n/2}; only filled for Gorenstein rows.
  std::vector<Monomial> extra_generators;
  HVector hvector;
  bool gorenstein = false;
};

inline SurveyRow survey_row(const Diagram& d) {
  const ClassificationReport report = classify(d);
  SurveyRow row{.diagram = d, .generators = borel_generators(d), .extra_generators = {}, .hvector = report.hvector};
  row.gorenstein = report.gorenstein;
  if (report.gorenstein) row.extra_generators = report.structural.extra_generators;
  return row;
}

inline std::vector<SurveyRow> classify_all(int n, bool gorenstein_only = false,
                                           std::uint64_t cap = kDefaultWorkCap) {
  std::vector<SurveyRow> out;
  for (const auto& d : enumerate_diagrams(n, cap)) {
    SurveyRow row = survey_row(d);
    if (!gorenstein_only || row.gorenstein) out.push_back(std::move(row));
  }
  return out;
}

/// Gorenstein rows for n = 2, 4, ..., 2 kmax.
inline std::vector<SurveyRow> appendix_table(int kmax) {
  if (kmax < 1) throw std::invalid_argument("appendix_table needs kmax >= 1");
  std::vector<SurveyRow> out;
  for (int k = 1; k <= kmax; ++k) {
    auto rows = classify_all(2 * k, true);
    out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  return out;
}

/// One line per row: "k | h-vector | W".
inline std::string render_appendix_table(const std::vector<SurveyRow>& rows) {
  std::string out = "k | h-vector | W\n";
  for (const auto& row : rows)
    out += std::to_string(row.diagram.dimension() / 2) + " | " + to_string(row.hvector) + " | " +
           format_st(row.extra_generators) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Published table and audit

struct AppendixRow {
  int k = 0;
  HVector h;
  /// Listed W; the algebra is K[V_{2k} ∪ st(generators)].
  std::vector<Monomial> generators;
};

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t p = 0; p < line.size(); ++p) {
    const char c = line[p];
    if (quoted) {
      if (c == '"' && p + 1 < line.size() && line[p + 1] == '"') {
        fields.back() += '"';
        ++p;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line '" + std::string(line) + "'");
  return fields;
}

inline HVector parse_bracket_list(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("expected bracketed list, got '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<BigInt> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("bad h-vector entry '" + std::string(token) + "'");
    entries.emplace_back(std::string(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return HVector(std::move(entries));
}

}  // namespace detail

/// Parses `k,h,gens` rows (header line required).
inline std::vector<AppendixRow> parse_appendix_csv(std::string_view text) {
  std::vector<AppendixRow> rows;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (header) {
      header = false;
      if (fields.size() != 3 || detail::trim(fields[0]) != "k")
        throw ParseError("appendix CSV must start with the header k,h,gens");
      continue;
    }
    if (fields.size() != 3) throw ParseError("appendix CSV row needs 3 fields: '" + std::string(line) + "'");
    AppendixRow row;
    row.k = detail::parse_index(fields[0], line);
    row.h = detail::parse_bracket_list(fields[1]);
    if (!detail::trim(fields[2]).empty()) row.generators = parse_generators(fields[2]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<AppendixRow> bundled_appendix() { return parse_appendix_csv(kAppendixCsv); }

struct RowAudit {
  std::size_t index = 0;  // 0-based position in the table
  AppendixRow row;
  /// (a) the listed h-vector occurs among enumerated Gorenstein diagrams.
  bool hvector_found = false;
  /// Enumerated Gorenstein diagrams whose h-vector equals the listed one.
  std::vector<Diagram> carriers;
  /// V_{2k} ∪ st(listed generators), when the label denotes a diagram of dimension 2k.
  std::optional<Diagram> label_diagram;
  std::optional<HVector> label_hvector;
  /// (b) reasons the label does not describe the listed row.
  std::vector<std::string> label_issues;

  bool label_consistent() const { return label_issues.empty(); }
};

struct AuditReport {
  int kmax = 0;
  std::vector<RowAudit> rows;
  /// (c) enumerated Gorenstein diagrams not described by any consistent row.
  std::vector<SurveyRow> unlisted;

  std::size_t hvectors_found() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowAudit& r) { return r.hvector_found; }));
  }
  std::vector<const RowAudit*> inconsistent_labels() const {
    std::vector<const RowAudit*> out;
    for (const auto& r : rows)
      if (!r.label_consistent()) out.push_back(&r);
    return out;
  }
  bool perfect() const { return hvectors_found() == rows.size() && inconsistent_labels().empty() && unlisted.empty(); }
};

/// Compares the enumerated Gorenstein diagrams of dimension 2k, k <= kmax,
/// with the rows of `table` that have k <= kmax.
inline AuditReport audit_appendix(int kmax, const std::vector<AppendixRow>& table) {
  if (kmax < 1 || kmax > 5) throw std::invalid_argument("audit_appendix covers 1 <= kmax <= 5");
  AuditReport report;
  report.kmax = kmax;
  std::vector<std::vector<SurveyRow>> enumerated(static_cast<std::size_t>(kmax) + 1);
  for (int k = 1; k <= kmax; ++k) enumerated[static_cast<std::size_t>(k)] = classify_all(2 * k, true);

  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const AppendixRow& row = table[idx];
    if (row.k < 1 || row.k > kmax) continue;
    RowAudit audit;
    audit.index = idx;
    audit.row = row;
    for (const auto& e : enumerated[static_cast<std::size_t>(row.k)]) {
      if (e.hvector == row.h) audit.carriers.push_back(e.diagram);
    }
    audit.hvector_found = !audit.carriers.empty();

    const Diagram base = v2k(row.k);
    bool buildable = true;
    for (const auto& m : row.generators) {
      if (m.j > 2 * row.k) {
        audit.label_issues.push_back(to_string(m) + " uses a variable beyond x_" + std::to_string(2 * row.k));
        buildable = false;
      } else if (base.contains(m)) {
        audit.label_issues.push_back(to_string(m) + " already lies in V_" + std::to_string(2 * row.k));
      }
    }
    if (buildable) {
      Diagram label = base;
      for (const auto& m : row.generators) label = diagram_union(label, closure({m}));
      const HVector h = hilbert_series(label).numerator;
      if (h != row.h) audit.label_issues.push_back("label gives h = " + to_string(h) + ", table lists " + to_string(row.h));
      audit.label_diagram = label;
      audit.label_hvector = h;
    }
    report.rows.push_back(std::move(audit));
  }

  for (int k = 1; k <= kmax; ++k) {
    for (const auto& e : enumerated[static_cast<std::size_t>(k)]) {
      const bool listed = std::any_of(report.rows.begin(), report.rows.end(), [&](const RowAudit& r) {
        return r.label_consistent() && r.label_diagram && *r.label_diagram == e.diagram;
      });
      if (!listed) report.unlisted.push_back(e);
    }
  }
  return report;
}

inline AuditReport audit_appendix(int kmax) { return audit_appendix(kmax, bundled_appendix()); }

/// Plain-text audit summary, deterministic.
inline std::string render_audit(const AuditReport& report) {
  std::string out = "audit of published table, k <= " + std::to_string(report.kmax) + "\n";
  out += "rows checked: " + std::to_string(report.rows.size()) + "\n";
  out += "h-vectors found among enumerated Gorenstein diagrams: " + std::to_string(report.hvectors_found()) + "/" +
         std::to_string(report.rows.size()) + "\n";
  for (const auto& r : report.rows)
    if (!r.hvector_found)
      out += "  missing: row " + std::to_string(r.index + 1) + " k=" + std::to_string(r.row.k) + " h=" +
             to_string(r.row.h) + "\n";
  const auto bad = report.inconsistent_labels();
  out += "inconsistent labels: " + std::to_string(bad.size()) + "\n";
  for (const auto* r : bad) {
    out += "  row " + std::to_string(r->index + 1) + " k=" + std::to_string(r->row.k) + " " +
           format_st(r->row.generators) + " h=" + to_string(r->row.h) + "\n";
    for (const auto& issue : r->label_issues) out += "    " + issue + "\n";
    for (const auto& d : r->carriers) out += "    h-vector carried by bounds " + format_bounds(d) + "\n";
  }
  out += "enumerated but unlisted: " + std::to_string(report.unlisted.size()) + "\n";
  for (const auto& u : report.unlisted)
    out += "  k=" + std::to_string(u.diagram.dimension() / 2) + " V_" + std::to_string(u.diagram.dimension()) +
           " ∪ " + format_st(u.extra_generators) + " h=" + to_string(u.hvector) + "\n";
  out += report.perfect() ? "result: perfect match\n" : "result: discrepancies found\n";
  return out;
}

}  // namespace ssq
