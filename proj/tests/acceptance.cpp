// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ssq/ssq.hpp"

using namespace ssq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome example_reproduction() {
  Outcome o;
  const Diagram d = closure(parse_generators("3,4;2,6"));
  const HilbertSeries s = hilbert_series(d);
  o.check(s.numerator == HVector{1, 7, 5}, "h = " + to_string(s.numerator));
  o.check(to_string(s) == "(1 + 7t + 5t^2)/(1-t)^6", "series = " + to_string(s));
  const auto paths = enumerate_paths(d);
  o.check(paths.size() == 13, std::to_string(paths.size()) + " paths");
  std::set<std::string> one, two;
  for (const auto& p : paths) {
    if (p.north_parts() == 1) one.insert(to_string(p));
    if (p.north_parts() == 2) two.insert(to_string(p));
  }
  const std::set<std::string> listed_one{
      "x_2^2-x_1x_2-x_1x_3-x_1x_4-x_1x_5-x_1x_6", "x_2^2-x_2x_3-x_1x_3-x_1x_4-x_1x_5-x_1x_6",
      "x_2^2-x_2x_3-x_2x_4-x_1x_4-x_1x_5-x_1x_6", "x_2^2-x_2x_3-x_2x_4-x_2x_5-x_1x_5-x_1x_6",
      "x_2^2-x_2x_3-x_2x_4-x_2x_5-x_2x_6-x_1x_6", "x_3^2-x_2x_3-x_1x_3-x_1x_4-x_1x_5-x_1x_6",
      "x_3^2-x_3x_4-x_2x_4-x_1x_4-x_1x_5-x_1x_6"};
  const std::set<std::string> listed_two{
      "x_3^2-x_2x_3-x_2x_4-x_1x_4-x_1x_5-x_1x_6", "x_3^2-x_2x_3-x_2x_4-x_2x_5-x_1x_5-x_1x_6",
      "x_3^2-x_2x_3-x_2x_4-x_2x_5-x_2x_6-x_1x_6", "x_3^2-x_3x_4-x_2x_4-x_2x_5-x_1x_5-x_1x_6",
      "x_3^2-x_3x_4-x_2x_4-x_2x_5-x_2x_6-x_1x_6"};
  o.check(one == listed_one, "h=1 paths differ from the listing");
  o.check(two == listed_two, "h=2 paths differ from the listing");
  return o;
}

bool three_way(const Diagram& d) {
  const HVector dp = hvector_dp(d);
  return dp == antichain_counts(d) && dp == path_histogram(enumerate_paths(d));
}

Outcome triple_method() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 2; n <= 9; ++n)
    for (const auto& d : enumerate_diagrams(n)) {
      o.check(three_way(d), "mismatch at " + format_bounds(d));
      ++checked;
    }
  std::mt19937_64 rng(20240601);
  for (int s = 0; s < 200; ++s) {
    const Diagram d = random_diagram(rng, std::uniform_int_distribution<int>(1, 12)(rng));
    o.check(three_way(d), "mismatch at random " + format_bounds(d));
  }
  o.detail = o.ok ? std::to_string(checked) + " exhaustive + 200 random" : o.detail;
  return o;
}

Outcome formulas() {
  Outcome o;
  for (int k = 1; k <= 8; ++k) o.check(hvec_v2k(k) == hvector_dp(v2k(k)), "v2k k=" + std::to_string(k));
  for (int n = 1; n <= 12; ++n)
    o.check(hvec_veronese(n) == hvector_dp(closure({Monomial(n, n)})), "veronese n=" + std::to_string(n));
  for (int k = 1; k <= 7; ++k)
    for (int j = k + 1; j <= 2 * k; ++j)
      o.check(hvec_v2k_square(k, j) == hvector_dp(diagram_union(v2k(k), closure({Monomial(j, j)}))),
              "v2k-square k=" + std::to_string(k) + " j=" + std::to_string(j));
  for (int k = 2; k <= 7; ++k)
    o.check(hvec_hook(k) == hvector_dp(closure({Monomial(2, 2 * k), Monomial(2 * k - 1, 2 * k - 1)})),
            "hook k=" + std::to_string(k));
  for (int k = 2; k <= 7; ++k)
    for (int a = 3; a <= k + 1; ++a)
      o.check(hvec_onebox(k, a) == hvector_dp(onebox_diagram(k, a)),
              "onebox k=" + std::to_string(k) + " a=" + std::to_string(a));
  return o;
}

Outcome classifier_equivalence() {
  Outcome o;
  std::size_t total = 0, gorenstein = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      const HVector h = hvector_dp(d);
      const bool sym = is_symmetric(h);
      const bool structural = classify_structural(d, h).holds();
      const bool quick = quick_check(h);
      o.check(sym == structural && sym == quick, "disagreement at " + format_bounds(d));
      ++total;
      gorenstein += sym;
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " diagrams, " + std::to_string(gorenstein) + " Gorenstein";
  return o;
}

Outcome appendix() {
  Outcome o;
  const auto table = bundled_appendix();

  std::vector<HVector> published_small, enumerated_small;
  for (const auto& r : table)
    if (r.k <= 3) published_small.push_back(r.h);
  for (const auto& r : appendix_table(3)) enumerated_small.push_back(r.hvector);
  std::sort(published_small.begin(), published_small.end());
  std::sort(enumerated_small.begin(), enumerated_small.end());
  o.check(published_small.size() == 10 && published_small == enumerated_small, "2k <= 6 multiset differs");

  const AuditReport report = audit_appendix(5, table);
  for (const auto& r : report.rows)
    if (r.row.k >= 4 && !r.hvector_found)
      o.check(false, "published h " + to_string(r.row.h) + " (row " + std::to_string(r.index + 1) +
                         ") not among enumerated diagrams");

  bool x4x8_flagged = false;
  for (const auto* r : report.inconsistent_labels())
    if (r->row.k == 5 && r->row.generators == std::vector<Monomial>{Monomial(4, 8)}) x4x8_flagged = true;
  o.check(x4x8_flagged, "label st(x_4x_8) not flagged");

  const Diagram v8_x5x8 = diagram_union(v2k(4), closure({Monomial(5, 8)}));
  bool unlisted = false;
  for (const auto& u : report.unlisted)
    if (u.diagram == v8_x5x8) unlisted = true;
  o.check(unlisted, "V_8 ∪ st(x_5x_8) not reported as unlisted");
  const HVector want{1, 22, 53, 22, 1};
  o.check(hvector_dp(v8_x5x8) == want && antichain_counts(v8_x5x8) == want, "V_8 ∪ st(x_5x_8) h-vector");

  o.check(render_audit(report) == render_audit(audit_appendix(5, table)), "audit output not deterministic");
  return o;
}

Outcome semigroup_oracle() {
  Outcome o;
  const auto v4 = expand(hilbert_series(v2k(2)), 3);
  for (int i = 0; i <= 3; ++i) o.check(direct_hf(v2k(2), i) == v4[static_cast<std::size_t>(i)], "V_4 HF");
  o.check(v4 == std::vector<BigInt>{1, 8, 27, 64}, "HF(K[V_4]) != 1, 8, 27, 64");
  std::mt19937_64 rng(42);
  for (int s = 0; s < 50; ++s) {
    const Diagram d = random_diagram(rng, std::uniform_int_distribution<int>(1, 7)(rng));
    const auto coeffs = expand(hilbert_series(d), 3);
    for (int i = 0; i <= 3; ++i)
      o.check(direct_hf(d, i) == coeffs[static_cast<std::size_t>(i)], "HF mismatch at " + format_bounds(d));
  }
  return o;
}

Outcome narayana_catalan() {
  Outcome o;
  for (int k = 1; k <= 25; ++k) {
    BigInt total = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt product = binomial(k, i) * binomial(k, i - 1);
      o.check(product % k == 0, "N(" + std::to_string(k) + "," + std::to_string(i) + ") not integral");
      o.check(narayana(k, i) == narayana(k, k - i + 1), "symmetry k=" + std::to_string(k));
      total += narayana(k, i);
    }
    o.check(total == catalan(k), "Catalan sum k=" + std::to_string(k));
  }
  return o;
}

Outcome veronese() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const HVector h = antichain_counts(closure({Monomial(n, n)}));
    for (int i = 0; 2 * i <= n + 1; ++i)
      o.check(h.at(i) == binomial(n, 2 * i), "n=" + std::to_string(n) + " i=" + std::to_string(i));
    // n = 1 is the polynomial ring K[x_1^2], trivially palindromic.
    if (n >= 2) o.check(is_symmetric(h) == (n % 2 == 0), "palindromicity n=" + std::to_string(n));
  }
  return o;
}

Outcome even_dimension() {
  Outcome o;
  std::size_t searched = 0;
  for (int n = 3; n <= 9; n += 2)
    for (const auto& d : enumerate_diagrams(n)) {
      o.check(!is_symmetric(hvector_dp(d)), "odd Gorenstein " + format_bounds(d));
      ++searched;
    }
  if (o.ok) o.detail = std::to_string(searched) + " odd-dimensional diagrams";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example reproduction", 1.0, example_reproduction},
      {2, "triple-method equivalence", 30.0, triple_method},
      {3, "closed forms vs DP", 10.0, formulas},
      {4, "classifier equivalence n <= 10", 60.0, classifier_equivalence},
      {5, "published table reproduction", 60.0, appendix},
      {6, "semigroup oracle", 30.0, semigroup_oracle},
      {7, "Narayana and Catalan", 1.0, narayana_catalan},
      {8, "Veronese h-vectors", 5.0, veronese},
      {9, "no odd-dimensional Gorenstein diagrams", 10.0, even_dimension},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.check(false, "over time budget");
    failures += !o.ok;
    std::printf("%s criterion %d: %s [%.3fs / %.0fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_seconds, o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
