#pragma once

// Self-check suite behind `ssq verify`: every structural invariant of the
// library, each checked against an independent route.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ssq/core.hpp"
#include "ssq/enumerate.hpp"
#include "ssq/families.hpp"
#include "ssq/gorenstein.hpp"
#include "ssq/hilbert.hpp"

namespace ssq {

struct VerifyOptions {
  int max_n = 8;
  int hf_degree = 3;
  int samples = 50;
  std::uint64_t seed = 42;
  std::uint64_t cap = kDefaultWorkCap;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

namespace detail {

/// Number of strongly stable sets of dimension n containing x_2 x_n, by
/// testing every subset of the boxes below row 1 with bit operations.
inline std::uint64_t brute_force_diagram_count(int n) {
  std::vector<Monomial> cells;
  std::map<Monomial, int> index;
  for (int a = 2; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      index[Monomial(a, b)] = static_cast<int>(cells.size());
      cells.emplace_back(a, b);
    }
  // Required predecessors of each cell inside rows >= 2.
  std::vector<std::uint64_t> needs(cells.size(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto [a, b] = cells[c];
    if (a - 1 >= 2) needs[c] |= std::uint64_t{1} << index.at(Monomial(a - 1, b));
    if (b - 1 >= a) needs[c] |= std::uint64_t{1} << index.at(Monomial(a, b - 1));
  }
  const std::uint64_t corner = std::uint64_t{1} << index.at(Monomial(2, n));
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << cells.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!(mask & corner)) continue;
    bool closed = true;
    for (std::size_t c = 0; c < cells.size() && closed; ++c)
      if ((mask >> c & 1) && (mask & needs[c]) != needs[c]) closed = false;
    count += closed;
  }
  return count;
}

inline std::set<Monomial> box_set_from_generators(const std::vector<Monomial>& gens, int n) {
  std::set<Monomial> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (const auto& g : gens)
        if (a <= g.i && b <= g.j) {
          out.insert(Monomial(a, b));
          break;
        }
  return out;
}

}  // namespace detail

inline std::vector<PropertyResult> run_verification(const VerifyOptions& opt) {
  std::vector<PropertyResult> results;
  std::mt19937_64 rng(opt.seed);
  const int max_n = std::max(opt.max_n, 2);
  auto random_dim = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<Diagram> samples;
  for (int s = 0; s < opt.samples; ++s) samples.push_back(random_diagram(rng, random_dim(1, max_n + 3)));
  std::vector<Diagram> exhaustive;
  for (int n = 2; n <= max_n; ++n)
    for (auto& d : enumerate_diagrams(n)) exhaustive.push_back(std::move(d));

  auto check = [&](std::string name, const std::function<std::string()>& body) {
    PropertyResult r;
    r.name = std::move(name);
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const WorkCapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };

  check("core.closure_idempotent", [&]() -> std::string {
    for (const auto& d : samples) {
      const auto boxes = d.boxes();
      if (closure(boxes) != d) return "closure of box set differs for " + format_bounds(d);
      if (closure(borel_generators(d)) != d) return "closure of Borel generators differs for " + format_bounds(d);
    }
    return {};
  });

  check("core.membership_matches_closure", [&]() -> std::string {
    for (const auto& d : samples) {
      const auto explicit_boxes = detail::box_set_from_generators(borel_generators(d), d.dimension());
      for (int a = 1; a <= d.dimension(); ++a)
        for (int b = a; b <= d.dimension(); ++b)
          if (d.contains(Monomial(a, b)) != explicit_boxes.contains(Monomial(a, b)))
            return "membership mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") in " +
                   format_bounds(d);
    }
    return {};
  });

  check("core.strongly_stable_box_sets", [&]() -> std::string {
    for (const auto& d : samples) {
      const auto boxes = d.boxes();
      std::set<Monomial> set(boxes.begin(), boxes.end());
      if (!is_strongly_stable(set)) return "box set of " + format_bounds(d) + " rejected";
      const auto gens = borel_generators(d);
      for (const auto& m : boxes) {
        if (std::find(gens.begin(), gens.end(), m) != gens.end()) continue;
        auto flipped = set;
        flipped.erase(m);
        if (is_strongly_stable(flipped)) return "removing interior box " + to_string(m) + " kept stability";
      }
    }
    return {};
  });

  check("core.normalize_idempotent_preserves_h", [&]() -> std::string {
    for (const auto& d : samples) {
      const Diagram norm = normalize(d);
      if (normalize(norm) != norm) return "normalize not idempotent on " + format_bounds(d);
      if (hvector_dp(norm) != hvector_dp(d)) return "normalize changed h for " + format_bounds(d);
    }
    return {};
  });

  check("hilbert.triple_agreement", [&]() -> std::string {
    auto one = [&](const Diagram& d) -> std::string {
      const HVector dp = hvector_dp(d);
      const HVector anti = antichain_counts(d);
      const auto paths = enumerate_paths(d, opt.cap);
      const HVector hist = path_histogram(paths);
      if (dp != anti || dp != hist)
        return "bounds " + format_bounds(d) + ": dp " + to_string(dp) + " antichain " + to_string(anti) +
               " paths " + to_string(hist);
      if (dp.sum() != paths.size()) return "path total mismatch for " + format_bounds(d);
      return {};
    };
    for (const auto& d : exhaustive)
      if (auto e = one(d); !e.empty()) return e;
    for (const auto& d : samples)
      if (auto e = one(d); !e.empty()) return e;
    return {};
  });

  check("hilbert.h1_counts_boxes_below_row1", [&]() -> std::string {
    for (const auto& d : exhaustive) {
      const auto expected = static_cast<long long>(d.box_count()) - d.dimension();
      if (hvector_dp(d).at(1) != expected) return "h_1 mismatch for " + format_bounds(d);
    }
    return {};
  });

  check("hilbert.row1_invariance", [&]() -> std::string {
    for (const auto& d : samples) {
      const auto base = hilbert_series(d);
      for (int extra = 1; extra <= 2; ++extra) {
        const auto longer = hilbert_series(extend_first_row(d, d.dimension() + extra));
        if (longer.numerator != base.numerator || longer.denom_power != d.dimension() + extra)
          return "row-1 extension changed numerator of " + format_bounds(d);
      }
    }
    return {};
  });

  check("hilbert.direct_hf_oracle", [&]() -> std::string {
    std::mt19937_64 local(opt.seed + 1);
    const int hi = std::min(max_n, 7);
    for (int s = 0; s < opt.samples; ++s) {
      const Diagram d = random_diagram(local, std::uniform_int_distribution<int>(1, hi)(local));
      const auto coeffs = expand(hilbert_series(d), opt.hf_degree);
      for (int i = 0; i <= opt.hf_degree; ++i)
        if (direct_hf(d, i, opt.cap) != coeffs[static_cast<std::size_t>(i)])
          return "HF(" + std::to_string(i) + ") mismatch for " + format_bounds(d);
    }
    return {};
  });

  check("hilbert.v2k_binomial_squares", [&]() -> std::string {
    for (int k = 1; k <= max_n; ++k) {
      const HVector h = antichain_counts(v2k(k));
      for (int i = 0; i <= k; ++i)
        if (h.at(i) != binomial(k, i) * binomial(k, i)) return "V_" + std::to_string(2 * k) + " h_" + std::to_string(i);
    }
    return {};
  });

  check("gorenstein.method_equivalence", [&]() -> std::string {
    for (const auto& d : exhaustive) {
      const HVector h = hvector_dp(d);
      const bool sym = is_symmetric(h);
      const bool structural = classify_structural(d, h).holds();
      const bool quick = quick_check(h);
      if (sym != structural || sym != quick) return "disagreement on " + format_bounds(d);
    }
    return {};
  });

  check("gorenstein.even_dimension", [&]() -> std::string {
    for (const auto& d : exhaustive)
      if (d.dimension() % 2 == 1 && is_symmetric(hvector_dp(d))) return "odd-dimensional Gorenstein " + format_bounds(d);
    return {};
  });

  check("gorenstein.at_most_one_square", [&]() -> std::string {
    for (const auto& d : exhaustive) {
      const auto report = classify(d);
      if (!report.gorenstein) continue;
      int squares = 0;
      for (const auto& m : report.structural.extra_generators) squares += m.is_square();
      if (squares > 1) return "several squares in " + format_bounds(d);
    }
    return {};
  });

  check("gorenstein.row1_extension_invariance", [&]() -> std::string {
    for (const auto& d : exhaustive) {
      const auto a = classify(d);
      const auto b = classify(extend_first_row(d, d.dimension() + 1));
      if (a.gorenstein != b.gorenstein || a.hvector != b.hvector) return "verdict changed for " + format_bounds(d);
    }
    return {};
  });

  check("families.formula_vs_dp", [&]() -> std::string {
    for (int k = 1; k <= 8; ++k)
      if (hvec_v2k(k) != hvector_dp(v2k(k))) return "v2k k=" + std::to_string(k);
    for (int n = 1; n <= 12; ++n)
      if (hvec_veronese(n) != hvector_dp(closure({Monomial(n, n)}))) return "veronese n=" + std::to_string(n);
    for (int k = 1; k <= 7; ++k) {
      for (int j = k + 1; j <= 2 * k; ++j)
        if (hvec_v2k_square(k, j) != hvector_dp(diagram_union(v2k(k), closure({Monomial(j, j)}))))
          return "v2k-square k=" + std::to_string(k) + " j=" + std::to_string(j);
      if (k >= 2 && hvec_hook(k) != hvector_dp(closure({Monomial(2, 2 * k), Monomial(2 * k - 1, 2 * k - 1)})))
        return "hook k=" + std::to_string(k);
      for (int a = 3; a <= k + 1; ++a)
        if (hvec_onebox(k, a) != hvector_dp(onebox_diagram(k, a)))
          return "onebox k=" + std::to_string(k) + " a=" + std::to_string(a);
    }
    return {};
  });

  check("families.narayana_symmetry_catalan", [&]() -> std::string {
    for (int k = 1; k <= 25; ++k) {
      BigInt total = 0;
      for (int i = 1; i <= k; ++i) {
        if (narayana(k, i) != narayana(k, k - i + 1)) return "N(" + std::to_string(k) + ",i) not symmetric";
        total += narayana(k, i);
      }
      if (total != catalan(k)) return "row " + std::to_string(k) + " does not sum to Catalan";
    }
    return {};
  });

  check("families.veronese_palindromic_iff_even", [&]() -> std::string {
    for (int n = 1; n <= 12; ++n) {
      const HVector anti = antichain_counts(closure({Monomial(n, n)}));
      if (anti != hvec_veronese(n)) return "antichains of st(x_n^2) n=" + std::to_string(n);
      if (n >= 2 && is_symmetric(anti) != (n % 2 == 0)) return "parity n=" + std::to_string(n);
    }
    return {};
  });

  check("enumerate.count_vs_bruteforce", [&]() -> std::string {
    for (int n = 2; n <= std::min(max_n, 7); ++n) {
      const auto listed = enumerate_diagrams(n);
      if (!std::is_sorted(listed.begin(), listed.end())) return "not sorted at n=" + std::to_string(n);
      if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return "duplicates at n=" + std::to_string(n);
      if (listed.size() != detail::brute_force_diagram_count(n)) return "count mismatch at n=" + std::to_string(n);
    }
    return {};
  });

  check("enumerate.appendix_small_exact", [&]() -> std::string {
    const int kmax = std::min(3, max_n / 2);
    std::multiset<std::vector<BigInt>> ours, theirs;
    for (const auto& row : appendix_table(kmax)) ours.insert(row.hvector.entries());
    for (const auto& row : bundled_appendix())
      if (row.k <= kmax) theirs.insert(row.h.entries());
    return ours == theirs ? std::string{} : "Gorenstein h-vectors differ from the table for k <= " + std::to_string(kmax);
  });

  check("enumerate.appendix_hvectors_present", [&]() -> std::string {
    const int kmax = std::min(5, max_n / 2);
    const auto report = audit_appendix(kmax);
    for (const auto& r : report.rows)
      if (!r.hvector_found) return "table row " + std::to_string(r.index + 1) + " h = " + to_string(r.row.h) + " not found";
    return {};
  });

  return results;
}

}  // namespace ssq
