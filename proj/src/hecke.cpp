#include "qschur/hecke.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qschur/insertion.hpp"

namespace qschur {

Eigen::MatrixXd t_matrix_yyh(const Partition& lambda, int i, const QParam& q) {
  if (!q.is_finite()) throw std::invalid_argument("Hecke matrices need a finite q");
  if (i < 1 || i >= lambda.size()) throw std::invalid_argument("Hecke generator index out of range");
  const auto& basis = cached_syt(lambda);
  const BasisIndex<StandardTableau> index(basis);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto& t = basis[c];
    const int a = axial_distance(t.box_of(i + 1), t.box_of(i));
    const double qa = signed_qint(a, q).value();
    m(c, c) = qpow_half(-2L * a, q).value() / qa;
    if (auto swapped = t.swap_adjacent(i)) {
      if (std::abs(a) < 2) throw std::logic_error("adjacent boxes cannot be swapped");
      m(static_cast<Eigen::Index>(index.at(*swapped)), c) = std::sqrt(1.0 - 1.0 / (qa * qa));
    }
  }
  return m;
}

Eigen::MatrixXd t_action_word(int n, int d, int i, const QParam& q) {
  if (!q.is_finite()) throw std::invalid_argument("Hecke matrices need a finite q");
  if (i < 1 || i >= n) throw std::invalid_argument("Hecke generator index out of range");
  const double qv = q.value();
  const auto words = all_words(n, d);
  const auto dim = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto& w = words[c];
    const int a = w[i - 1];
    const int b = w[i];
    if (a == b) {
      m(c, c) = 1.0 / qv;
      continue;
    }
    auto swapped = w;
    std::swap(swapped[i - 1], swapped[i]);
    m(static_cast<Eigen::Index>(word_index(swapped, d)), c) = 1.0;
    if (a > b) m(c, c) = 1.0 / qv - qv;
  }
  return m;
}

namespace {

template <class Make>
RelationResiduals hecke_relations(int n, const QParam& q, Make&& make) {
  RelationResiduals out;
  std::vector<Eigen::MatrixXd> T;
  for (int i = 1; i < n; ++i) T.push_back(make(i));
  if (T.empty()) return out;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(T[0].rows(), T[0].cols());
  const double qv = q.value();
  for (std::size_t a = 0; a < T.size(); ++a) {
    out.record("quadratic", max_abs_diff((T[a] - I / qv) * (T[a] + qv * I), Eigen::MatrixXd::Zero(I.rows(), I.cols())));
    out.record("symmetric", max_abs_diff(T[a], T[a].transpose()));
    if (a + 1 < T.size())
      out.record("braid", max_abs_diff(T[a] * T[a + 1] * T[a], T[a + 1] * T[a] * T[a + 1]));
    for (std::size_t b = a + 2; b < T.size(); ++b)
      out.record("far_commute", max_abs_diff(T[a] * T[b], T[b] * T[a]));
  }
  return out;
}

}  // namespace

RelationResiduals verify_hecke_relations(const Partition& lambda, const QParam& q) {
  return hecke_relations(lambda.size(), q, [&](int i) { return t_matrix_yyh(lambda, i, q); });
}

RelationResiduals verify_hecke_relations(int n, int d, const QParam& q) {
  auto out = hecke_relations(n, q, [&](int i) { return t_action_word(n, d, i, q); });
  // The word representation is not symmetric away from q = 1.
  out.by_relation.erase("symmetric");
  return out;
}

}  // namespace qschur
