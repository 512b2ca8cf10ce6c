#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qschur/insertion.hpp"
#include "qschur/pieri.hpp"

using namespace qschur;
using Eigen::MatrixXd;

namespace {

QParam fq(double v) { return QParam::finite(v); }

SemiStandardTableau ssyt(std::string_view text) {
  return SemiStandardTableau::from_rows(parse_tableau_rows(text));
}

// Block of the Pieri transform for one cover, rows in SSYT(μ, d) order and
// columns in (t, i) order.
MatrixXd library_block(const PieriColumns& pc, int cover) {
  const auto rows = enumerate_ssyt(pc.covers[static_cast<std::size_t>(cover)], pc.d).size();
  MatrixXd m = MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(pc.columns.size()));
  for (std::size_t c = 0; c < pc.columns.size(); ++c)
    for (const auto& e : pc.columns[c])
      if (e.cover == cover) m(static_cast<Eigen::Index>(e.target), static_cast<Eigen::Index>(c)) = e.value;
  return m;
}

struct Shapes {
  Partition top, below;
};

// Pairs (top, below) with below ⊆ top, top / below a horizontal strip, at
// most `level` rows on top and level-1 below.
std::vector<Shapes> level_shapes(int level, int max_size) {
  std::vector<Shapes> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& top : partitions_of(n, level))
      for (int m = 0; m <= n; ++m)
        for (const auto& below : partitions_of(m, level - 1))
          if (top.contains(below) && is_horizontal_strip(SkewShape(top, below)))
            out.push_back({top, below});
  return out;
}

const SemiStandardTableau example_t = SemiStandardTableau::from_rows({{1, 1, 2}, {2, 3}});
const SemiStandardTableau example_s = SemiStandardTableau::from_rows({{1, 1, 2}, {2, 2}, {3}});

}  // namespace

TEST(Wigner, AgreesWithIntertwinerOracle) {
  // The Pieri block for each cover is the unique (up to sign) normalized
  // U_q(d)-intertwiner V^λ ⊗ V -> V^μ.
  for (double q : {0.5, 1.0, 2.0})
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 3; ++n)
        for (const auto& lambda : partitions_of(n, d)) {
          const auto pc = pieri_columns(lambda, d, fq(q));
          for (int c = 0; c < static_cast<int>(pc.covers.size()); ++c) {
            int dim = 0;
            const MatrixXd ref = oracle::pieri_block(lambda, pc.covers[static_cast<std::size_t>(c)], d, q, &dim);
            ASSERT_EQ(dim, 1) << to_text(lambda) << " -> " << to_text(pc.covers[static_cast<std::size_t>(c)]);
            const MatrixXd got = library_block(pc, c);
            const double diff = std::min(max_abs_diff(got, ref), max_abs_diff(got, -ref));
            EXPECT_LT(diff, 1e-9) << to_text(lambda) << " d=" << d << " q=" << q;
          }
        }
}

TEST(Wigner, WorkedExampleAgainstOracle) {
  const Partition lambda({3, 2}), mu({3, 2, 1});
  const auto basis_l = enumerate_ssyt(lambda, 3), basis_m = enumerate_ssyt(mu, 3);
  const auto col = BasisIndex<SemiStandardTableau>(basis_l).at(example_t) * 3 + 1;
  const auto row = BasisIndex<SemiStandardTableau>(basis_m).at(example_s);
  for (double q : {0.5, 1.0, 2.0}) {
    const MatrixXd ref = oracle::pieri_block(lambda, mu, 3, q);
    const double w = wigner(example_s, example_t, 2, fq(q));
    EXPECT_NEAR(std::fabs(w), std::fabs(ref(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col))), 1e-10);
  }
  EXPECT_NEAR(wigner(example_s, example_t, 2, fq(1.0)), -std::sqrt(2.0 / 15.0), 1e-12);
}

TEST(Wigner, WorkedExampleFactors) {
  // s arises from t by placing 2 at the end of row 2 of t^{(2)} and pushing
  // the 3 from row 2 down to row 3.
  const auto ctx = WignerContext::make(example_s, example_t, 2);
  ASSERT_TRUE(ctx.has_value());
  EXPECT_EQ(ctx->row_i, 2);
  EXPECT_EQ(ctx->bump_chain(), (std::vector<int>{2, 3}));
  for (double q : {0.5, 1.0, 2.0}) {
    double product = w0(*ctx, fq(q)).value();
    for (const auto& step : ctx->steps)
      if (step.bump) product *= w1(*ctx, step, fq(q)).value();
    EXPECT_NEAR(product, wigner(example_s, example_t, 2, fq(q)), 1e-14);
  }
}

TEST(Wigner, TrivialCases) {
  EXPECT_NEAR(wigner(ssyt("1"), SemiStandardTableau(), 1, fq(0.3)), 1.0, 1e-14);
  EXPECT_NEAR(w0_at(SemiStandardTableau(), 1, 1, fq(5.0)).value(), 1.0, 1e-14);
  EXPECT_EQ(wigner(ssyt("1,1/2"), ssyt("1,1"), 1, fq(2.0)), 0.0);
  EXPECT_EQ(wigner(ssyt("1,2,3"), ssyt("1,1"), 2, fq(2.0)), 0.0);
  // Inserting the largest letter never bumps.
  const auto t = ssyt("1,1,2/2,3");
  for (const auto& [s, c] : pieri_column(t, 3, 3, fq(1.5))) {
    const auto ctx = WignerContext::make(s, t, 3);
    ASSERT_TRUE(ctx.has_value());
    EXPECT_NEAR(c, w0(*ctx, fq(1.5)).value(), 1e-14);
  }
}

TEST(Wigner, ColumnsAreUnitVectors) {
  for (double q : {0.25, 0.5, 1.0, 2.0, 4.0})
    for (int d = 1; d <= 4; ++d)
      for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n, d))
          for (const auto& t : enumerate_ssyt(lambda, d))
            for (int i = 1; i <= d; ++i) {
              double norm = 0.0;
              for (const auto& [s, c] : pieri_column(t, i, d, fq(q))) norm += c * c;
              EXPECT_NEAR(norm, 1.0, 1e-9);
            }
}

TEST(Wigner, SupportInsideQuantumInsertion) {
  for (double q : {0.5, 2.0})
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n, d))
          for (const auto& t : enumerate_ssyt(lambda, d))
            for (int i = 1; i <= d; ++i) {
              std::set<SemiStandardTableau> reach;
              for (const auto& o : q_insert(t, i)) reach.insert(o.result);
              for (const auto& [s, c] : pieri_column(t, i, d, fq(q)))
                EXPECT_TRUE(reach.count(s)) << to_text(t) << " <- " << i << " gives " << to_text(s);
            }
}

TEST(Wigner, RecursiveFormAgrees) {
  for (double q : {0.5, 1.0, 3.0})
    for (int d = 1; d <= 4; ++d)
      for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n, d))
          for (const auto& t : enumerate_ssyt(lambda, d))
            for (int i = 1; i <= d; ++i)
              for (const auto& o : q_insert(t, i))
                EXPECT_NEAR(wigner_recursive(o.result, t, i, d, fq(q)), wigner(o.result, t, i, fq(q), d), 1e-12);
}

TEST(Wigner, SymbolicLimitsAreApproached) {
  for (auto limit : {QParam::Kind::zero, QParam::Kind::infinity}) {
    const QParam sym = limit == QParam::Kind::zero ? QParam::zero() : QParam::infinity();
    const QParam near = fq(limit == QParam::Kind::zero ? 1e-4 : 1e4);
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n, d))
          for (const auto& t : enumerate_ssyt(lambda, d))
            for (int i = 1; i <= d; ++i)
              for (const auto& o : q_insert(t, i)) {
                const double a = wigner(o.result, t, i, sym, d);
                EXPECT_TRUE(a == 0.0 || a == 1.0 || a == -1.0);
                EXPECT_NEAR(wigner(o.result, t, i, near, d), a, 1e-2);
              }
  }
}

TEST(Wigner, InfinityLimitIsRowInsertionWithBumpingSign) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : partitions_of(n, d))
        for (const auto& t : enumerate_ssyt(lambda, d))
          for (int i = 1; i <= d; ++i) {
            const auto col = pieri_column(t, i, d, QParam::infinity());
            ASSERT_EQ(col.size(), 1u);
            const auto rsk = rsk_insert(t, i);
            EXPECT_EQ(col[0].first, rsk.result);
            EXPECT_EQ(col[0].second, rsk.sign);
          }
}

TEST(Wigner, ZeroLimitIsColumnInsertion) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : partitions_of(n, d))
        for (const auto& t : enumerate_ssyt(lambda, d))
          for (int i = 1; i <= d; ++i) {
            const auto col = pieri_column(t, i, d, QParam::zero());
            ASSERT_EQ(col.size(), 1u);
            EXPECT_EQ(col[0].first, dual_rsk_insert(t, i).result);
            EXPECT_EQ(col[0].second, 1.0);
          }
}

TEST(ReducedWigner, CrystalValues) {
  // Only configurations with a nonzero coefficient at q = 1 are compared.
  const auto one = fq(1.0);
  int checked = 0;
  for (int level = 1; level <= 3; ++level)
    for (const auto& [top, below] : level_shapes(level, 4)) {
      if (!w0_shapes(top, below, level, 1, one).is_zero()) {
        EXPECT_EQ(w0_limit_shapes(top, below, level, 1, QParam::Kind::infinity), 1)
            << to_text(top) << " / " << to_text(below);
        ++checked;
      }
      for (int r1 = 1; r1 < level; ++r1) {
        if (!w1_shapes(top, below, level, r1, r1 + 1, one).is_zero()) {
          EXPECT_EQ(w1_limit_shapes(top, below, level, r1, r1 + 1, QParam::Kind::infinity), -1)
              << to_text(top) << " / " << to_text(below) << " r1=" << r1;
          ++checked;
        }
        if (!w1_shapes(top, below, level, r1, r1, one).is_zero()) {
          EXPECT_EQ(w1_limit_shapes(top, below, level, r1, r1, QParam::Kind::zero), 1)
              << to_text(top) << " / " << to_text(below) << " r=" << r1;
          ++checked;
        }
      }
    }
  EXPECT_GT(checked, 50);
}

TEST(ReducedWigner, SameRowSignIsPositiveAtOne) {
  for (int level = 2; level <= 3; ++level)
    for (const auto& [top, below] : level_shapes(level, 4))
      for (int r = 1; r < level; ++r) {
        const double v = w1_shapes(top, below, level, r, r, fq(1.0)).value();
        EXPECT_GE(v, 0.0);
      }
}

TEST(ReducedWignerTransform, Orthogonal) {
  for (double q : {0.5, 1.0, 2.0})
    for (int d = 1; d <= 4; ++d)
      for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n, d))
          for (int m = 0; m <= n + 1; ++m)
            for (const auto& mu : partitions_of(m, d - 1)) {
              const auto t = reduced_wigner_transform(lambda, mu, d, fq(q));
              if (t.values.size() == 0) continue;
              ASSERT_EQ(t.values.rows(), t.values.cols()) << to_text(lambda) << " " << to_text(mu);
              const MatrixXd g = t.values.transpose() * t.values;
              EXPECT_LT(max_abs_diff(g, MatrixXd::Identity(g.rows(), g.cols())), 1e-9)
                  << to_text(lambda) << " " << to_text(mu) << " d=" << d;
            }
}

TEST(ReducedWignerTransform, SmallExample) {
  // U_q(2) acting on V^{(1)} ⊗ V with μ' = (1): inputs i=2 and r1=1,
  // outputs r2=1 and r2=2.
  const auto t = reduced_wigner_transform(Partition({1}), Partition({1}), 2, fq(1.0));
  ASSERT_EQ(t.values.rows(), 2);
  ASSERT_EQ(t.values.cols(), 2);
  EXPECT_LT(max_abs_diff(t.values.cwiseAbs(), MatrixXd::Constant(2, 2, std::sqrt(0.5))), 1e-12);
  EXPECT_NEAR(t.values.determinant() * t.values.determinant(), 1.0, 1e-12);
}

TEST(PieriMatrix, EmptyShapeIsIdentity) {
  const auto m = pieri_matrix(Partition(), 2, fq(0.7));
  EXPECT_EQ(m.values, MatrixXd::Identity(2, 2));
  EXPECT_EQ(m.row_labels, (std::vector<std::string>{"[1];1", "[1];2"}));
  EXPECT_EQ(m.col_labels, (std::vector<std::string>{";1", ";2"}));
}

TEST(PieriMatrix, ClassicalClebschGordan) {
  // V ⊗ V = symmetric triplet ⊕ antisymmetric singlet.
  const auto m = pieri_matrix(Partition({1}), 2, fq(1.0));
  ASSERT_EQ(m.row_labels, (std::vector<std::string>{"[2];1,1", "[2];1,2", "[2];2,2", "[1,1];1/2"}));
  ASSERT_EQ(m.col_labels, (std::vector<std::string>{"1;1", "1;2", "2;1", "2;2"}));
  const double h = std::sqrt(0.5);
  MatrixXd expected(4, 4);
  expected << 1, 0, 0, 0, 0, h, h, 0, 0, 0, 0, 1, 0, h, -h, 0;
  EXPECT_LT(std::min(max_abs_diff(m.values, expected),
                     max_abs_diff(m.values, (Eigen::Vector4d(1, 1, 1, -1).asDiagonal() * expected).eval())),
            1e-14);
}

TEST(PieriMatrix, Orthogonal) {
  for (double q : {0.5, 1.0, 2.0})
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n, d)) {
          const MatrixXd v = pieri_matrix(lambda, d, fq(q)).values;
          ASSERT_EQ(v.rows(), v.cols());
          EXPECT_LT(max_abs_diff(v.transpose() * v, MatrixXd::Identity(v.rows(), v.cols())), 1e-9);
        }
}

TEST(PieriMatrix, SymbolicLimitIsSignedPermutation) {
  for (auto q : {QParam::zero(), QParam::infinity()})
    for (const auto& lambda : partitions_of(3, 3)) {
      const MatrixXd v = pieri_matrix(lambda, 3, q).values;
      EXPECT_EQ(v.cwiseAbs().colwise().sum(), Eigen::RowVectorXd::Ones(v.cols()));
      EXPECT_EQ(v.cwiseAbs().rowwise().sum(), Eigen::VectorXd::Ones(v.rows()));
    }
}
