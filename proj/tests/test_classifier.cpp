#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <regex>

#include "gl2sing/classifier.hpp"

using namespace gl2sing;

namespace {

// Pattern oracle: letters Z (0), M (p-2), S (p-1), x (other), searched on the doubled word.
struct OracleResult {
  Verdict verdict = Verdict::SMOOTH;
  int nonnormal_codim = 0;
  bool gorenstein = false;
  int sing_codim = 0;
};

OracleResult oracle(int p, const std::vector<int>& n) {
  int f = static_cast<int>(n.size());
  std::string word;
  for (int x : n) word += x == p - 1 ? 'S' : x == p - 2 ? 'M' : x == 0 ? 'Z' : 'x';
  OracleResult r;
  if (std::regex_match(word, std::regex("S+"))) return r;
  if (std::regex_match(word, std::regex("M+"))) {
    r.verdict = Verdict::NON_NORMAL;
    r.nonnormal_codim = f;
    return r;
  }
  std::string doubled = word + word;
  std::regex pat("ZM*S");
  std::vector<int> lengths;
  for (auto it = std::sregex_iterator(doubled.begin(), doubled.end(), pat); it != std::sregex_iterator(); ++it) {
    int len = static_cast<int>(it->length());
    if (it->position() < f && len <= f) lengths.push_back(len);
  }
  if (lengths.empty()) return r;
  r.verdict = Verdict::NORMAL_SINGULAR;
  r.gorenstein = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 2; });
  r.sing_codim = *std::min_element(lengths.begin(), lengths.end());
  return r;
}

std::vector<std::vector<int>> all_n(int p, int f) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(f, 0);
  while (true) {
    out.push_back(n);
    int j = f - 1;
    while (j >= 0 && n[j] == p - 1) n[j--] = 0;
    if (j < 0) break;
    ++n[j];
  }
  return out;
}

}  // namespace

TEST(Classifier, RuleExamples) {
  auto a = classify_weight(SerreWeight::make(5, {3, 3, 3}));
  EXPECT_EQ(a.verdict, Verdict::NON_NORMAL);
  EXPECT_EQ(a.nonnormal_codim, 3);
  EXPECT_TRUE(a.complement_smooth);

  auto b = classify_weight(SerreWeight::make(5, {0, 4}));
  EXPECT_EQ(b.verdict, Verdict::NORMAL_SINGULAR);
  EXPECT_TRUE(b.lci);
  EXPECT_TRUE(b.gorenstein);
  EXPECT_EQ(b.sing_codim, 2);

  auto c = classify_weight(SerreWeight::make(7, {0, 5, 6}));
  EXPECT_EQ(c.verdict, Verdict::NORMAL_SINGULAR);
  EXPECT_FALSE(c.gorenstein);
  EXPECT_FALSE(c.lci);
  EXPECT_EQ(c.sing_codim, 3);

  auto st = classify_weight(SerreWeight::make(5, {4, 4}));
  EXPECT_EQ(st.verdict, Verdict::SMOOTH);
  EXPECT_EQ(st.provenance, "steinberg");
  EXPECT_EQ(classify_weight(SerreWeight::make(5, {1, 2})).verdict, Verdict::SMOOTH);
}

TEST(Classifier, ChartExamples) {
  auto a = classify_via_charts(SerreWeight::make(5, {3, 3}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->verdict, Verdict::NON_NORMAL);
  auto b = classify_via_charts(SerreWeight::make(5, {0, 4}));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->verdict, Verdict::NORMAL_SINGULAR);
  EXPECT_TRUE(b->lci);
  EXPECT_EQ(b->sing_codim, 2);
  EXPECT_FALSE(classify_via_charts(SerreWeight::make(5, {0})).has_value());
  EXPECT_EQ(classify_weight(SerreWeight::make(5, {0})).verdict, Verdict::SMOOTH);
  EXPECT_THROW(classify_via_charts(SerreWeight::make(5, {4, 4})), Error);
}

TEST(Classifier, EnumerationCensus) {
  auto count = [](int p, int f) {
    std::map<Verdict, int> c;
    for (const auto& row : enumerate_weights(p, f)) ++c[row.rule.verdict];
    return c;
  };
  auto c1 = count(5, 1);
  EXPECT_EQ(c1[Verdict::NON_NORMAL], 1);
  EXPECT_EQ(c1[Verdict::SMOOTH], 4);
  EXPECT_EQ(c1[Verdict::NORMAL_SINGULAR], 0);
  auto c2 = count(5, 2);
  EXPECT_EQ(c2[Verdict::NON_NORMAL], 1);
  EXPECT_EQ(c2[Verdict::NORMAL_SINGULAR], 2);
  EXPECT_EQ(c2[Verdict::SMOOTH], 22);

  auto rows = enumerate_weights(5, 2);
  ASSERT_EQ(rows.size(), 25u);
  EXPECT_EQ(rows.front().weight.n, (std::vector<int>{0, 0}));
  EXPECT_EQ(rows.back().weight.n, (std::vector<int>{4, 4}));
}

TEST(Classifier, EnumerationBoundAndFilter) {
  EnumerationOptions opts;
  opts.bound = 100;
  EXPECT_THROW(enumerate_weights(7, 3, opts), BoundExceeded);
  EnumerationOptions filt;
  filt.filter = [](const SerreWeight& w) { return w.n[0] == 0; };
  EXPECT_EQ(enumerate_weights(5, 2, filt).size(), 5u);
}

TEST(Classifier, ParallelEnumerationMatchesSerial) {
  EnumerationOptions par;
  par.jobs = 4;
  auto a = enumerate_weights(7, 3);
  auto b = enumerate_weights(7, 3, par);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].weight.n, b[i].weight.n);
    EXPECT_TRUE(a[i].rule.same_result(b[i].rule));
    EXPECT_EQ(a[i].agreement, b[i].agreement);
  }
}

TEST(Classifier, RuleMatchesPatternOracle) {
  for (auto [p, fmax] : std::vector<std::pair<int, int>>{{5, 4}, {7, 3}, {11, 2}})
    for (int f = 1; f <= fmax; ++f)
      for (const auto& n : all_n(p, f)) {
        auto d = classify_weight(SerreWeight::make(p, n));
        auto o = oracle(p, n);
        ASSERT_EQ(d.verdict, o.verdict) << p << " f=" << f;
        EXPECT_EQ(d.nonnormal_codim, o.nonnormal_codim);
        if (o.verdict == Verdict::NORMAL_SINGULAR) {
          EXPECT_EQ(d.gorenstein, o.gorenstein);
          EXPECT_EQ(d.lci, o.gorenstein);
          EXPECT_EQ(d.sing_codim, o.sing_codim);
        }
      }
}

TEST(Classifier, ChartsNeverDisagree) {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    int agree = 0;
    for (const auto& row : enumerate_weights(p, f)) {
      EXPECT_NE(row.agreement, Agreement::DISAGREE);
      agree += row.agreement == Agreement::AGREE;
    }
    EXPECT_GT(agree, 0);
  }
}

TEST(Classifier, RotationInvariance) {
  for (const auto& n : all_n(7, 3)) {
    auto w = SerreWeight::make(7, n);
    auto d = classify_weight(w);
    for (int s = 1; s < 3; ++s) EXPECT_TRUE(classify_weight(w.rotated(s)).same_result(d));
  }
}
