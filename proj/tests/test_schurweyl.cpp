#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qschur/insertion.hpp"
#include "qschur/parallel.hpp"
#include "qschur/schurweyl.hpp"

using namespace qschur;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

QParam fq(double v) { return QParam::finite(v); }

std::size_t label_of(const std::vector<SchurBasisLabel>& basis, const SemiStandardTableau& p,
                     const StandardTableau& q) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].P == p && basis[k].Q == q) return k;
  return basis.size();
}

}  // namespace

TEST(SchurBasis, Counts) {
  EXPECT_EQ(schur_basis(3, 2).size(), 8u);
  const auto one = schur_basis(1, 3);
  ASSERT_EQ(one.size(), 3u);
  for (const auto& l : one) EXPECT_EQ(l.lambda, Partition({1}));
  const auto zero = schur_basis(0, 2);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].lambda.empty() && zero[0].P.empty() && zero[0].Q.empty());
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(schur_basis(n, d).size(), static_cast<std::size_t>(std::lround(std::pow(d, n))));
}

TEST(SchurBasis, OrderAndText) {
  const auto b = schur_basis(3, 2);
  EXPECT_EQ(to_text(b.front()), "[3];1,1,1;1,2,3");
  EXPECT_EQ(b[4].lambda, Partition({2, 1}));
  EXPECT_EQ(to_text(b[4]), "[2,1];1,1/2;1,2/3");
  EXPECT_EQ(to_text(b[5]), "[2,1];1,1/2;1,3/2");
}

TEST(SchurTransform, MatchesCascadeOracle) {
  for (double q : {0.5, 1.0, 2.0})
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 3; ++n)
        EXPECT_LT(max_abs_diff(schur_transform_dense(n, d, fq(q)).values, oracle::cascade_transform(n, d, fq(q))),
                  1e-12)
            << "n=" << n << " d=" << d << " q=" << q;
  EXPECT_LT(max_abs_diff(schur_transform_dense(4, 2, fq(0.7)).values, oracle::cascade_transform(4, 2, fq(0.7))),
            1e-12);
  for (auto q : {QParam::zero(), QParam::infinity()})
    EXPECT_EQ(schur_transform_dense(3, 2, q).values, oracle::cascade_transform(3, 2, q));
}

TEST(SchurTransform, Unitary) {
  for (double q : {0.25, 0.5, 1.0, 2.0, 4.0})
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 4; ++n) {
        const MatrixXd u = schur_transform_dense(n, d, fq(q)).values;
        EXPECT_LT(max_abs_diff(u.transpose() * u, MatrixXd::Identity(u.cols(), u.cols())), 1e-9);
      }
}

TEST(SchurTransform, SingleLetterIsIdentity) {
  const auto m = schur_transform_dense(1, 3, fq(0.5));
  EXPECT_EQ(m.values, MatrixXd::Identity(3, 3));
  EXPECT_EQ(m.col_labels, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(m.row_labels[2], "[1];3;1");
}

TEST(SchurTransform, ClassicalTwoQubits) {
  const MatrixXd u = schur_transform_dense(2, 2, fq(1.0)).values;
  const double h = std::sqrt(0.5);
  MatrixXd expected(4, 4);
  expected << 1, 0, 0, 0, 0, h, h, 0, 0, 0, 0, 1, 0, h, -h, 0;
  EXPECT_LT(max_abs_diff(u.cwiseAbs(), expected.cwiseAbs()), 1e-14);
  EXPECT_NEAR(std::fabs(u.row(3).dot(expected.row(3))), 1.0, 1e-14);
}

TEST(SchurTransform, ConstantWordHasOneImage) {
  for (double q : {0.3, 1.0, 5.0})
    for (int n = 1; n <= 4; ++n) {
      const MatrixXd u = schur_transform_dense(n, 2, fq(q)).values;
      EXPECT_NEAR(std::fabs(u(0, 0)), 1.0, 1e-12);
      EXPECT_NEAR(u.col(0).norm(), 1.0, 1e-12);
    }
}

TEST(SchurTransform, ContinuousInQ) {
  const MatrixXd at_one = schur_transform_dense(3, 3, fq(1.0)).values;
  EXPECT_LT(max_abs_diff(schur_transform_dense(3, 3, fq(1.0 + 1e-9)).values, at_one), 1e-7);
  EXPECT_LT(max_abs_diff(schur_transform_dense(3, 3, fq(1.0 - 1e-9)).values, at_one), 1e-7);
}

TEST(SchurTransform, CapIsEnforced) {
  EXPECT_THROW(schur_transform_dense(5, 3, fq(1.0), 100), std::length_error);
  EXPECT_NO_THROW(schur_transform_dense(4, 3, fq(1.0), 81));
}

TEST(SchurApply, MatchesDense) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (double q : {0.5, 1.0, 2.0})
    for (int d = 2; d <= 3; ++d)
      for (int n = 1; n <= 4; ++n) {
        const MatrixXd u = schur_transform_dense(n, d, fq(q)).values;
        MatrixXd states(u.cols(), 3);
        for (Eigen::Index k = 0; k < states.size(); ++k) states.data()[k] = g(rng);
        EXPECT_LT(max_abs_diff(schur_apply(states, Direction::forward, n, d, fq(q)), u * states), 1e-12);
        EXPECT_LT(max_abs_diff(schur_apply(states, Direction::inverse, n, d, fq(q)), u.transpose() * states),
                  1e-12);
      }
}

TEST(SchurApply, RoundTrip) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  VectorXd v(243);
  for (auto& x : v) x = g(rng);
  const VectorXd w = schur_apply(schur_apply(v, Direction::forward, 5, 3, fq(0.4)), Direction::inverse, 5, 3, fq(0.4));
  EXPECT_LT((w - v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SchurApply, RejectsWrongLength) {
  EXPECT_THROW(schur_apply(VectorXd(VectorXd::Zero(5)), Direction::forward, 2, 2, fq(1.0)), std::invalid_argument);
}

TEST(SchurApply, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  MatrixXd states(729, 4);
  for (Eigen::Index k = 0; k < states.size(); ++k) states.data()[k] = g(rng);
  setenv("QSCHUR_THREADS", "1", 1);
  const MatrixXd a = schur_apply(states, Direction::forward, 6, 3, fq(1.3));
  setenv("QSCHUR_THREADS", "4", 1);
  const MatrixXd b = schur_apply(states, Direction::forward, 6, 3, fq(1.3));
  unsetenv("QSCHUR_THREADS");
  EXPECT_EQ(a, b);
}

TEST(SchurApply, OperationCountIsRecorded) {
  ApplyStats st;
  schur_apply(VectorXd(VectorXd::Zero(16)), Direction::forward, 4, 2, fq(1.0), &st);
  EXPECT_GT(st.multiply_adds, 0u);
  EXPECT_LT(st.multiply_adds, 16u * 16u);
  EXPECT_EQ(st.stages, 4);
}

TEST(CrystalLimit, InfinityIsSignedRsk) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 5; ++n) {
      const auto basis = schur_basis(n, d);
      const auto images = crystal_limit_transform(n, d, QParam::Kind::infinity);
      const auto words = all_words(n, d);
      std::set<std::size_t> hit;
      for (std::size_t w = 0; w < words.size(); ++w) {
        const auto pair = rsk_word(words[w]);
        SemiStandardTableau t;
        int sign = 1;
        for (int x : words[w]) {
          const auto o = rsk_insert(t, x);
          sign *= o.sign;
          t = o.result;
        }
        EXPECT_EQ(images[w].label, label_of(basis, pair.P, pair.Q));
        EXPECT_EQ(images[w].sign, sign);
        hit.insert(images[w].label);
      }
      EXPECT_EQ(hit.size(), words.size());
    }
}

TEST(CrystalLimit, ZeroIsDualRsk) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 5; ++n) {
      const auto basis = schur_basis(n, d);
      const auto images = crystal_limit_transform(n, d, QParam::Kind::zero);
      const auto words = all_words(n, d);
      std::set<std::size_t> hit;
      for (std::size_t w = 0; w < words.size(); ++w) {
        const auto pair = dual_rsk_word(words[w]);
        EXPECT_EQ(images[w].label, label_of(basis, pair.P, pair.Q));
        EXPECT_EQ(images[w].sign, 1);
        hit.insert(images[w].label);
      }
      EXPECT_EQ(hit.size(), words.size());
    }
}

TEST(CrystalLimit, WorkedWord) {
  const auto basis = schur_basis(3, 2);
  const auto images = crystal_limit_transform(3, 2, QParam::Kind::infinity);
  const auto& img = images[word_index({2, 1, 2}, 2)];
  EXPECT_EQ(to_text(basis[img.label]), "[2,1];1,2/2;1,3/2");
  EXPECT_EQ(img.sign, -1);
}

TEST(CrystalLimit, NearbyFiniteQ) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n) {
      EXPECT_LT(max_abs_diff(schur_transform_dense(n, d, fq(1e3)).values,
                             schur_transform_dense(n, d, QParam::infinity()).values),
                0.05);
      EXPECT_LT(max_abs_diff(schur_transform_dense(n, d, fq(1e-3)).values,
                             schur_transform_dense(n, d, QParam::zero()).values),
                0.05);
    }
}

TEST(Intertwiners, Examples) {
  EXPECT_LT(verify_intertwiners(3, 2, fq(1.0)).max(), 1e-9);
  EXPECT_LT(verify_intertwiners(3, 2, fq(2.0)).max(), 1e-9);
  EXPECT_LT(verify_intertwiners(4, 2, fq(0.5)).max(), 1e-9);
  EXPECT_LT(verify_intertwiners(2, 3, fq(4.0)).max(), 1e-9);
  EXPECT_LT(verify_intertwiners(3, 2, fq(2.0)).k_half_residual, 1e-10);
}

TEST(Intertwiners, SeparateRecoveriesAgreeWithJoint) {
  for (double q : {0.5, 2.0}) {
    const auto joint = verify_intertwiners(3, 3, fq(q));
    const auto hecke = verify_intertwiner_hecke(3, 3, fq(q));
    const auto group = verify_intertwiner_qgroup(3, 3, fq(q));
    EXPECT_LT(joint.max(), 1e-9);
    EXPECT_LT(hecke.hecke_residual, 1e-9);
    EXPECT_LT(group.qgroup_residual, 1e-9);
    EXPECT_EQ(joint.signs, hecke.signs);
    EXPECT_EQ(joint.signs, group.signs);
  }
}

TEST(Intertwiners, WordActionsAreBlockDiagonal) {
  const auto rep = verify_intertwiners(4, 2, fq(1.7));
  EXPECT_LT(rep.off_block, 1e-10);
}
