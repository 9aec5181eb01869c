#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ssq/enumerate.hpp"

using namespace ssq;

namespace {

std::vector<HVector> sorted_hvectors(const std::vector<SurveyRow>& rows) {
  std::vector<HVector> out;
  for (const auto& r : rows) out.push_back(r.hvector);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(EnumerateDiagrams, CountsAreBinaryPowers) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(enumerate_diagrams(n).size(), std::size_t{1} << (n - 2)) << n;
}

TEST(EnumerateDiagrams, MatchesSubsetOracle) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(enumerate_diagrams(n).size(), oracle::no_free_variable_sets(n)) << n;
}

TEST(EnumerateDiagrams, SortedDistinctNormalized) {
  const auto all = enumerate_diagrams(9);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (const auto& d : all) {
    EXPECT_TRUE(has_no_free_variable(d));
    EXPECT_EQ(normalize(d), d);
  }
}

TEST(EnumerateDiagrams, ErrorsAndCap) {
  EXPECT_THROW(enumerate_diagrams(1), std::invalid_argument);
  EXPECT_THROW(enumerate_diagrams(10, 100), WorkCapExceeded);
  EXPECT_NO_THROW(enumerate_diagrams(10, 256));
}

TEST(RandomDiagram, ReproducibleWithSeed) {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_diagram(a, 8), random_diagram(b, 8));
  EXPECT_THROW(random_diagram(a, 0), std::invalid_argument);
}

TEST(ClassifyAll, GorensteinCounts) {
  const std::map<int, std::size_t> expected{{2, 1}, {3, 0}, {4, 3}, {5, 0}, {6, 6}, {7, 0}, {8, 12}, {9, 0}};
  for (const auto& [n, count] : expected) EXPECT_EQ(classify_all(n, true).size(), count) << n;
  const auto all4 = classify_all(4);
  ASSERT_EQ(all4.size(), 4u);
  EXPECT_EQ(std::count_if(all4.begin(), all4.end(), [](const SurveyRow& r) { return r.gorenstein; }), 3);
}

TEST(AppendixTable, SmallTableReproduces) {
  std::vector<HVector> published;
  for (const auto& row : bundled_appendix())
    if (row.k <= 3) published.push_back(row.h);
  std::sort(published.begin(), published.end());
  ASSERT_EQ(published.size(), 10u);
  EXPECT_EQ(sorted_hvectors(appendix_table(3)), published);
}

TEST(AppendixTable, Rendering) {
  const std::string text = render_appendix_table(appendix_table(2));
  EXPECT_EQ(text,
            "k | h-vector | W\n"
            "1 | (1, 1) | ∅\n"
            "2 | (1, 4, 1) | ∅\n"
            "2 | (1, 5, 1) | st(x_3x_4)\n"
            "2 | (1, 6, 1) | st(x_4^2)\n");
}

TEST(AppendixCsv, EmbeddedCopyMatchesDataFile) {
  std::ifstream in(SSQ_SOURCE_DIR "/data/appendix.csv", std::ios::binary);
  ASSERT_TRUE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), std::string(kAppendixCsv));
}

TEST(AppendixCsv, ParsesBundledTable) {
  const auto rows = bundled_appendix();
  ASSERT_EQ(rows.size(), 44u);
  EXPECT_EQ(rows.front().k, 1);
  EXPECT_TRUE(rows.front().generators.empty());
  EXPECT_EQ(rows[2].generators, (std::vector<Monomial>{{3, 4}}));
  for (const auto& r : rows) {
    EXPECT_EQ(r.h.degree(), r.k);
    EXPECT_TRUE(is_symmetric(r.h));
  }
}

TEST(AppendixCsv, RejectsMalformed) {
  EXPECT_THROW(parse_appendix_csv("x,y,z\n"), ParseError);
  EXPECT_THROW(parse_appendix_csv("k,h,gens\n2,\"[1,4,1]\"\n"), ParseError);
  EXPECT_THROW(parse_appendix_csv("k,h,gens\n2,\"[1,4,1\",\n"), ParseError);
  EXPECT_THROW(parse_appendix_csv("k,h,gens\n2,\"[1,a,1]\",\n"), ParseError);
  EXPECT_THROW(parse_appendix_csv("k,h,gens\n2,\"[1,4,1],\n"), ParseError);
  EXPECT_TRUE(parse_appendix_csv("k,h,gens\n\n").empty());
}

TEST(Audit, PerfectUpToThree) {
  const auto report = audit_appendix(3);
  EXPECT_EQ(report.rows.size(), 10u);
  EXPECT_TRUE(report.perfect());
  EXPECT_NE(render_audit(report).find("result: perfect match"), std::string::npos);
}

TEST(Audit, KFourListsOneUnlistedDiagram) {
  const auto report = audit_appendix(4);
  EXPECT_EQ(report.hvectors_found(), report.rows.size());
  EXPECT_TRUE(report.inconsistent_labels().empty());
  ASSERT_EQ(report.unlisted.size(), 1u);
  EXPECT_EQ(report.unlisted[0].diagram, diagram_union(v2k(4), closure({Monomial(5, 8)})));
  EXPECT_EQ(report.unlisted[0].hvector, (HVector{1, 22, 53, 22, 1}));
}

TEST(Audit, KFiveDiscrepancies) {
  const auto report = audit_appendix(5);
  ASSERT_EQ(report.rows.size(), 44u);
  EXPECT_EQ(report.hvectors_found(), 43u);

  const auto bad = report.inconsistent_labels();
  std::vector<std::size_t> bad_rows;
  for (const auto* r : bad) bad_rows.push_back(r->index + 1);
  EXPECT_EQ(bad_rows, (std::vector<std::size_t>{32, 33, 36}));

  // Row 32's h-vector is carried by a diagram that is not V_10 ∪ st(x_4x_8).
  const RowAudit& row32 = *bad[0];
  EXPECT_EQ(row32.row.generators, (std::vector<Monomial>{{4, 8}}));
  EXPECT_TRUE(row32.hvector_found);
  ASSERT_EQ(row32.carriers.size(), 1u);
  EXPECT_EQ(row32.carriers[0].bounds(), (std::vector<int>{10, 10, 10, 10, 7, 7, 6, 7, 8, 9}));

  const RowAudit& row36 = *bad[2];
  EXPECT_FALSE(row36.hvector_found);
  ASSERT_TRUE(row36.label_hvector.has_value());
  EXPECT_EQ(*row36.label_hvector, (HVector{1, 35, 155, 155, 35, 1}));

  EXPECT_EQ(report.unlisted.size(), 5u);
  EXPECT_FALSE(report.perfect());

  const std::string text = render_audit(report);
  EXPECT_EQ(text, render_audit(audit_appendix(5)));
  EXPECT_NE(text.find("st(x_4x_8)"), std::string::npos);
  EXPECT_NE(text.find("(1, 22, 53, 22, 1)"), std::string::npos);
}

TEST(Audit, RangeChecked) {
  EXPECT_THROW(audit_appendix(0), std::invalid_argument);
  EXPECT_THROW(audit_appendix(6), std::invalid_argument);
}

TEST(Audit, CustomTable) {
  const auto table = parse_appendix_csv("k,h,gens\n2,\"[1,4,1]\",\n2,\"[1,9,1]\",\"3,4\"\n");
  const auto report = audit_appendix(2, table);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_TRUE(report.rows[0].hvector_found);
  EXPECT_FALSE(report.rows[1].hvector_found);
  EXPECT_FALSE(report.rows[1].label_consistent());
  // V_2, V_4 ∪ st(x_3x_4) (its row is inconsistent) and st(x_4^2).
  EXPECT_EQ(report.unlisted.size(), 3u);
}
