#pragma once

// Gorenstein decision for K[W], W strongly stable and quadratic.
//
// Two routes: palindromic h-vector, and the structural test
//   W = V_{2k} ∪ st(m_1, ..., m_t) with n = 2k, where each m_r = x_i x_j has
//   i <= k+1 < j or i = j > k+1, and st(m_r), st(m_s) share no box on the
//   anti-diagonal i + j = 2k + 2 for r != s.
// classify() runs both plus the h_0/h_1 shortcut and insists they agree.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssq/core.hpp"
#include "ssq/errors.hpp"
#include "ssq/hilbert.hpp"

namespace ssq {

inline bool is_symmetric(const HVector& h) {
  const int k = h.degree();
  for (int i = 0; i <= k; ++i)
    if (h.at(i) != h.at(k - i)) return false;
  return true;
}

/// h_0 = h_k and h_1 = h_{k-1} (entries outside 0..k read as zero).
inline bool quick_check(const HVector& h) {
  const int k = h.degree();
  return h.at(0) == h.at(k) && h.at(1) == h.at(k - 1);
}

inline bool quick_check(const Diagram& d) { return quick_check(hvector_dp(d)); }

namespace detail {

inline void require_normalized(const Diagram& d) {
  if (normalize(d) != d) throw std::invalid_argument("diagram has a free variable; normalize it first");
}

}  // namespace detail

/// k if n = 2k and V_{2k} ⊆ d ⊆ st(x_{2k}^2), where k = deg h; nothing otherwise.
inline std::optional<int> necessary_check(const Diagram& d, const HVector& h) {
  detail::require_normalized(d);
  const int k = h.degree();
  if (k < 1 || d.dimension() != 2 * k) return std::nullopt;
  if (!is_subset(v2k(k), d)) return std::nullopt;
  if (!is_subset(d, closure({Monomial(2 * k, 2 * k)}))) return std::nullopt;
  return k;
}

inline std::optional<int> necessary_check(const Diagram& d) { return necessary_check(d, hvector_dp(d)); }

enum class StructuralOutcome {
  satisfied,           // W = V_{2k} ∪ st(m_1..m_t) with both conditions
  polynomial_ring,     // single box x_1^2: K[W] is a polynomial ring
  dimension_mismatch,  // n != 2 deg h
  missing_v2k,         // V_{2k} not contained in W
  condition1_violated,
  condition2_violated,
};

inline std::string to_string(StructuralOutcome o) {
  switch (o) {
    case StructuralOutcome::satisfied: return "satisfied";
    case StructuralOutcome::polynomial_ring: return "polynomial_ring";
    case StructuralOutcome::dimension_mismatch: return "dimension_mismatch";
    case StructuralOutcome::missing_v2k: return "missing_v2k";
    case StructuralOutcome::condition1_violated: return "condition1_violated";
    case StructuralOutcome::condition2_violated: return "condition2_violated";
  }
  return "unknown";
}

struct StructuralEvidence {
  StructuralOutcome outcome = StructuralOutcome::dimension_mismatch;
  int k = 0;
  /// Borel generators of W outside V_{2k}; empty unless the necessary check passed.
  std::vector<Monomial> extra_generators;
  /// Condition 1 witness.
  std::optional<Monomial> offending;
  /// Condition 2 witness: the pair and a box of the band they share.
  std::optional<std::pair<Monomial, Monomial>> offending_pair;
  std::optional<Monomial> shared_box;

  bool holds() const {
    return outcome == StructuralOutcome::satisfied || outcome == StructuralOutcome::polynomial_ring;
  }
};

inline bool satisfies_condition1(Monomial m, int k) { return (m.i <= k + 1 && k + 1 < m.j) || (m.is_square() && m.i > k + 1); }

/// Structural verdict for a normalized diagram with h-vector h.
inline StructuralEvidence classify_structural(const Diagram& d, const HVector& h) {
  detail::require_normalized(d);
  StructuralEvidence ev;
  if (d.row_empty(2)) {
    ev.outcome = StructuralOutcome::polynomial_ring;
    return ev;
  }
  ev.k = h.degree();
  const auto k = necessary_check(d, h);
  if (!k) {
    const bool dims_ok = ev.k >= 1 && d.dimension() == 2 * ev.k;
    ev.outcome = dims_ok ? StructuralOutcome::missing_v2k : StructuralOutcome::dimension_mismatch;
    return ev;
  }
  const Diagram base = v2k(*k);
  for (const auto& g : borel_generators(d))
    if (!base.contains(g)) ev.extra_generators.push_back(g);

  for (const auto& m : ev.extra_generators) {
    if (!satisfies_condition1(m, *k)) {
      ev.outcome = StructuralOutcome::condition1_violated;
      ev.offending = m;
      return ev;
    }
  }
  const int band = 2 * *k + 2;
  const auto& extra = ev.extra_generators;
  for (std::size_t r = 0; r < extra.size(); ++r) {
    const auto band_r = diagonal_band(closure({extra[r]}), band);
    for (std::size_t s = r + 1; s < extra.size(); ++s) {
      for (const auto& box : diagonal_band(closure({extra[s]}), band)) {
        if (std::find(band_r.begin(), band_r.end(), box) != band_r.end()) {
          ev.outcome = StructuralOutcome::condition2_violated;
          ev.offending_pair = {extra[r], extra[s]};
          ev.shared_box = box;
          return ev;
        }
      }
    }
  }
  ev.outcome = StructuralOutcome::satisfied;
  return ev;
}

inline StructuralEvidence classify_structural(const Diagram& d) { return classify_structural(d, hvector_dp(d)); }

struct ClassificationReport {
  bool gorenstein = false;
  bool symmetric = false;
  bool quick = false;
  bool method_agreement = false;
  /// Dimension and numerator degree of the normalized diagram.
  int n = 0;
  int k = 0;
  Diagram input;
  Diagram normalized;
  HVector hvector;
  StructuralEvidence structural;
};

/// Full classification. Normalizes first, then requires the symmetry test,
/// the structural test and quick_check to agree; throws InternalInconsistency
/// otherwise.
inline ClassificationReport classify(const Diagram& d) {
  const Diagram norm = normalize(d);
  const HilbertSeries series = hilbert_series(norm);
  ClassificationReport report{.input = d, .normalized = norm, .hvector = series.numerator, .structural = {}};
  report.n = norm.dimension();
  report.k = series.numerator.degree();
  report.symmetric = is_symmetric(series.numerator);
  report.quick = quick_check(series.numerator);
  report.structural = classify_structural(norm, series.numerator);
  report.method_agreement = report.symmetric == report.structural.holds() && report.symmetric == report.quick;
  if (!report.method_agreement)
    throw InternalInconsistency("Gorenstein tests disagree for bounds " + format_bounds(norm) + ": symmetric=" +
                                (report.symmetric ? "1" : "0") + " structural=" +
                                (report.structural.holds() ? "1" : "0") + " quick=" + (report.quick ? "1" : "0"));
  report.gorenstein = report.symmetric;
  if (report.gorenstein) {
    int squares = 0;
    for (const auto& m : report.structural.extra_generators) squares += m.is_square();
    if (squares > 1)
      throw InternalInconsistency("Gorenstein diagram " + format_bounds(norm) + " has several square generators");
  }
  return report;
}

}  // namespace ssq
