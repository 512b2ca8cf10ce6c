#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "qschur/insertion.hpp"

using namespace qschur;

namespace {

SemiStandardTableau ssyt(std::string_view text) {
  return SemiStandardTableau::from_rows(parse_tableau_rows(text));
}

// Column insertion traced directly on columns.
std::vector<std::vector<int>> dual_insert_columns(std::vector<std::vector<int>> cols, int x) {
  for (auto& col : cols) {
    auto it = std::find_if(col.begin(), col.end(), [&](int v) { return v >= x; });
    if (it == col.end()) {
      col.push_back(x);
      return cols;
    }
    std::swap(*it, x);
  }
  cols.push_back({x});
  return cols;
}

std::vector<std::vector<int>> columns_of(const Tableau& t) {
  std::vector<std::vector<int>> cols;
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  return cols;
}

}  // namespace

TEST(RskInsert, Examples) {
  const auto t = ssyt("1,1,2/2,3/3/4");
  const auto four = rsk_insert(t, 4);
  EXPECT_EQ(to_text(four.result), "1,1,2,4/2,3/3/4");
  EXPECT_EQ(four.new_box, (Box{1, 4}));
  EXPECT_TRUE(four.path.empty());
  const auto one = rsk_insert(t, 1);
  EXPECT_EQ(to_text(one.result), "1,1,1/2,2/3,3/4");
  ASSERT_EQ(one.path.size(), 2u);
  EXPECT_EQ(one.path[0], (BumpRecord{2, 1, 2}));
  EXPECT_EQ(one.path[1], (BumpRecord{3, 2, 3}));
  EXPECT_EQ(one.sign, 1);
  EXPECT_EQ(to_text(rsk_insert(SemiStandardTableau(), 5).result), "5");
}

TEST(RskInsert, BumpingSign) {
  // 2 bumps the 3 in row 1, which lands in row 2: one downward move.
  const auto o = rsk_insert(ssyt("1,3"), 2);
  EXPECT_EQ(to_text(o.result), "1,2/3");
  EXPECT_EQ(o.sign, -1);
  EXPECT_EQ(bumping_sign(o.path), -1);
}

TEST(DualRskInsert, Examples) {
  EXPECT_EQ(to_text(dual_rsk_insert(SemiStandardTableau(), 2).result), "2");
  EXPECT_EQ(to_text(dual_rsk_insert(ssyt("1"), 1).result), "1,1");
  EXPECT_EQ(to_text(dual_rsk_insert(ssyt("1/2"), 3).result), "1/2/3");
}

TEST(DualRskInsert, MatchesColumnTrace) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : all_words(n, 3)) {
      std::vector<std::vector<int>> cols;
      for (int x : w) cols = dual_insert_columns(cols, x);
      EXPECT_EQ(columns_of(dual_rsk_word(w).P), cols) << word_to_text(w);
    }
}

TEST(DualRskInsert, SignIsAlwaysPositive) {
  for (const auto& w : all_words(4, 3)) {
    SemiStandardTableau t;
    for (int x : w) {
      const auto o = dual_rsk_insert(t, x);
      EXPECT_EQ(o.sign, 1);
      t = o.result;
    }
  }
}

TEST(RskWord, Examples) {
  auto p = rsk_word({2, 1, 2});
  EXPECT_EQ(to_text(p.P), "1,2/2");
  EXPECT_EQ(to_text(p.Q), "1,3/2");
  p = rsk_word({2, 2, 1});
  EXPECT_EQ(to_text(p.P), "1,2/2");
  EXPECT_EQ(to_text(p.Q), "1,2/3");
  p = rsk_word({1, 2, 2});
  EXPECT_EQ(to_text(p.P), "1,2,2");
  EXPECT_EQ(to_text(p.Q), "1,2,3");
}

TEST(RskInverse, Examples) {
  EXPECT_EQ(rsk_inverse({ssyt("1,2/2"), StandardTableau::from_rows({{1, 3}, {2}})}),
            (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(rsk_inverse({ssyt("4"), StandardTableau::from_rows({{1}})}), (std::vector<int>{4}));
  EXPECT_EQ(rsk_inverse({ssyt("1,2,2"), StandardTableau::from_rows({{1, 2, 3}})}),
            (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(rsk_inverse({ssyt("1,2"), StandardTableau::from_rows({{1}, {2}})}),
               std::invalid_argument);
}

TEST(RskWord, Bijection) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n) {
      std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
      for (const auto& w : all_words(n, d)) {
        const auto pair = rsk_word(w);
        EXPECT_TRUE(pair.P.is_semistandard(d));
        EXPECT_TRUE(pair.Q.is_standard());
        EXPECT_EQ(pair.P.shape(), pair.Q.shape());
        EXPECT_EQ(rsk_inverse(pair), w);
        seen.insert({pair.P.rows(), pair.Q.rows()});
      }
      long expected = 0;
      for (const auto& lambda : partitions_of(n, d))
        expected += static_cast<long>(enumerate_ssyt(lambda, d).size() * enumerate_syt(lambda).size());
      EXPECT_EQ(static_cast<long>(seen.size()), expected);
      EXPECT_EQ(expected, std::lround(std::pow(d, n)));
    }
}

TEST(QInsert, WorkedExample) {
  const auto t = ssyt("1,1,2/2,3/4");
  std::set<std::string> row2;
  for (const auto& o : q_insert(t, 2))
    if (o.new_box.row == 2) row2.insert(to_text(o.result));
  EXPECT_EQ(row2, (std::set<std::string>{"1,1,2/2,2,3/4", "1,1,2/2,2,4/3"}));
}

TEST(QInsert, ContainsRskAndStaysSemistandard) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : partitions_of(n, d))
        for (const auto& t : enumerate_ssyt(lambda, d))
          for (int i = 1; i <= d; ++i) {
            const auto outs = q_insert(t, i);
            bool has_rsk = false;
            for (const auto& o : outs) {
              EXPECT_TRUE(o.result.is_semistandard(d));
              EXPECT_TRUE(covers(t.shape(), o.result.shape()));
              EXPECT_EQ(o.sign, bumping_sign(o.path));
              has_rsk |= o.result == rsk_insert(t, i).result;
            }
            EXPECT_TRUE(has_rsk);
          }
}

TEST(QInsert, EmptyTableau) {
  const auto outs = q_insert(SemiStandardTableau(), 3);
  ASSERT_EQ(outs.size(), 1u);
  EXPECT_EQ(to_text(outs[0].result), "3");
  EXPECT_EQ(outs[0].sign, 1);
}

TEST(QInsertWord, WorkedExample) {
  const auto recs = q_insert_word({1, 2, 2});
  std::multiset<std::string> got;
  for (const auto& r : recs) got.insert(to_text(r.P) + " x " + to_text(r.Q));
  EXPECT_EQ(got, (std::multiset<std::string>{"1,2,2 x 1,2,3", "1,2/2 x 1,2/3", "1,2/2 x 1,3/2"}));
}

TEST(QInsertWord, OutputSetIsPermutationInvariant) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_words(n, 3)) {
      auto sorted = w;
      std::sort(sorted.begin(), sorted.end());
      std::set<std::vector<std::vector<int>>> a, b;
      for (const auto& r : q_insert_word(w)) a.insert(r.P.rows());
      for (const auto& r : q_insert_word(sorted)) b.insert(r.P.rows());
      EXPECT_EQ(a, b) << word_to_text(w);
    }
}

TEST(Words, IndexIsBigEndian) {
  EXPECT_EQ(word_index({1, 1, 2}, 2), 1u);
  EXPECT_EQ(word_index({2, 1, 1}, 2), 4u);
  EXPECT_EQ(word_at(5, 3, 2), (std::vector<int>{2, 1, 2}));
  const auto ws = all_words(3, 3);
  for (std::size_t k = 0; k < ws.size(); ++k) EXPECT_EQ(word_index(ws[k], 3), k);
}
