#include "qschur/gtj.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qschur/insertion.hpp"
#include "qschur/parallel.hpp"

namespace qschur {

namespace {

// Content of the end of row p at level k: (# entries <= k in row p) - p.
int row_end(const SemiStandardTableau& t, int p, int k) { return t.restricted_row(p, k) - p; }

void require_finite(const QParam& q) {
  if (!q.is_finite()) throw std::invalid_argument("GTJ matrices need a finite q");
}

int k_weight(int letter, int i) { return letter == i ? 1 : (letter == i + 1 ? -1 : 0); }

}  // namespace

double h_eigenvalue(const SemiStandardTableau& t, int i, const QParam& q) {
  return qpow_half(t.content(i), q).value();
}

std::optional<SemiStandardTableau> lower_in_row(const SemiStandardTableau& t, int k, int i) {
  if (k < 1) throw std::invalid_argument("row index must be >= 1");
  if (k > static_cast<int>(t.rows().size())) return std::nullopt;
  auto rows = t.rows();
  auto& row = rows[k - 1];
  int pos = -1;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] == i) pos = static_cast<int>(c);
  if (pos < 0) return std::nullopt;
  row[pos] = i + 1;
  if (k < static_cast<int>(rows.size()) && pos < static_cast<int>(rows[k].size()) &&
      rows[k][pos] <= i + 1)
    return std::nullopt;
  return SemiStandardTableau::trusted(std::move(rows));
}

double f_coefficient(const SemiStandardTableau& t, int k, int i, const QParam& q) {
  require_finite(q);
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  if (!lower_in_row(t, k, i)) return 0.0;
  const int ck = row_end(t, k, i);
  LogScalar v = -LogScalar::one();
  for (int p = 1; p <= i + 1; ++p) v *= signed_qint(row_end(t, p, i + 1) - ck + 1, q);
  for (int p = 1; p <= i - 1; ++p) v *= signed_qint(row_end(t, p, i - 1) - ck, q);
  for (int p = 1; p <= i; ++p) {
    if (p == k) continue;
    const int a = row_end(t, p, i) - ck;
    v /= signed_qint(a + 1, q) * signed_qint(a, q);
  }
  return v.sqrt().value();
}

double f_coefficient_as_printed(const SemiStandardTableau& t, int k, int i, const QParam& q,
                                ActionReading reading) {
  require_finite(q);
  if (!lower_in_row(t, k, i)) return 0.0;
  const int lam_i = reading == ActionReading::strip_lengths
                        ? t.restricted_row(k, i) - t.restricted_row(k, i - 1)
                        : t.restricted_row(k, i);
  const int lam_next = reading == ActionReading::strip_lengths
                           ? t.restricted_row(k, i + 1) - t.restricted_row(k, i)
                           : t.restricted_row(k, i + 1);
  try {
    LogScalar v = signed_qint(lam_i, q) * signed_qint(lam_next + 1, q);
    for (int j = 1; j <= i + 1; ++j) {
      if (j == k) continue;
      const int a = row_end(t, j, i) - row_end(t, k, i);
      v *= signed_qint(a - lam_i, q) / signed_qint(a, q);
      v *= signed_qint(a + lam_next + 1, q) / signed_qint(a + 1, q);
    }
    return v.sqrt().value();
  } catch (const std::domain_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Eigen::MatrixXd generator_matrix(const Partition& lambda, int d, Generator g, const QParam& q) {
  require_finite(q);
  const auto& basis = cached_ssyt(lambda, d);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  if (g.kind == Generator::Kind::k_half) {
    if (g.index < 1 || g.index > d) throw std::invalid_argument("q^{h_i/2} index out of range");
    for (Eigen::Index c = 0; c < n; ++c) m(c, c) = h_eigenvalue(basis[c], g.index, q);
    return m;
  }
  if (g.index < 1 || g.index >= d) throw std::invalid_argument("generator index out of range");
  const BasisIndex<SemiStandardTableau> index(basis);
  parallel_for(basis.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const auto& t = basis[c];
      for (int k = 1; k <= t.shape().length(); ++k) {
        auto target = lower_in_row(t, k, g.index);
        if (!target) continue;
        m(static_cast<Eigen::Index>(index.at(*target)), static_cast<Eigen::Index>(c)) =
            f_coefficient(t, k, g.index, q);
      }
    }
  });
  if (g.kind == Generator::Kind::e) m.transposeInPlace();
  return m;
}

Eigen::MatrixXd word_generator_action(int n, int d, Generator g, const QParam& q) {
  require_finite(q);
  const auto words = all_words(n, d);
  const auto dim = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const int i = g.index;
  if (g.kind == Generator::Kind::k_half) {
    if (i < 1 || i > d) throw std::invalid_argument("q^{h_i/2} index out of range");
    for (Eigen::Index c = 0; c < dim; ++c) {
      int x = 0;
      for (int letter : words[c]) x += letter == i;
      m(c, c) = qpow_half(x, q).value();
    }
    return m;
  }
  if (i < 1 || i >= d) throw std::invalid_argument("generator index out of range");
  const int from = g.kind == Generator::Kind::f ? i : i + 1;
  const int to = g.kind == Generator::Kind::f ? i + 1 : i;
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto& w = words[c];
    for (int p = 0; p < n; ++p) {
      if (w[p] != from) continue;
      long e = 0;
      for (int a = 0; a < p; ++a) e += k_weight(w[a], i);
      for (int a = p + 1; a < n; ++a) e -= k_weight(w[a], i);
      auto w2 = w;
      w2[p] = to;
      m(static_cast<Eigen::Index>(word_index(w2, d)), c) += qpow_half(e, q).value();
    }
  }
  return m;
}

namespace {

Eigen::MatrixXd qint_diag(const Eigen::VectorXi& exps, const QParam& q) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(exps.size(), exps.size());
  for (Eigen::Index k = 0; k < exps.size(); ++k) m(k, k) = signed_qint(exps[k], q).value();
  return m;
}

}  // namespace

double commutator_residual(const Partition& lambda, int d, const QParam& q, bool use_difference) {
  const auto& basis = cached_ssyt(lambda, d);
  double worst = 0.0;
  for (int i = 1; i < d; ++i) {
    const auto E = generator_matrix(lambda, d, Generator::e(i), q);
    const auto F = generator_matrix(lambda, d, Generator::f(i), q);
    Eigen::VectorXi h(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
      h[static_cast<Eigen::Index>(k)] =
          basis[k].content(i) - (use_difference ? basis[k].content(i + 1) : 0);
    worst = std::max(worst, max_abs_diff(E * F - F * E, qint_diag(h, q)));
  }
  return worst;
}

RelationResiduals verify_serre(const Partition& lambda, int d, const QParam& q) {
  RelationResiduals out;
  std::vector<Eigen::MatrixXd> E(d + 1), F(d + 1), K(d + 1);
  for (int i = 1; i <= d; ++i) K[i] = generator_matrix(lambda, d, Generator::k_half(i), q);
  for (int i = 1; i < d; ++i) {
    E[i] = generator_matrix(lambda, d, Generator::e(i), q);
    F[i] = generator_matrix(lambda, d, Generator::f(i), q);
  }
  const double rq = std::sqrt(q.value());
  const double two = signed_qint(2, q).value();
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j)
      if (i != j) out.record("k_commute", max_abs_diff(K[i] * K[j], K[j] * K[i]));
    for (int j = 1; j < d; ++j) {
      const double fe = i == j ? rq : (i == j + 1 ? 1.0 / rq : 1.0);
      out.record("k_e", max_abs_diff(K[i] * E[j], fe * E[j] * K[i]));
      out.record("k_f", max_abs_diff(K[i] * F[j], (1.0 / fe) * F[j] * K[i]));
    }
  }
  out.record("e_f_commutator", commutator_residual(lambda, d, q, true));
  for (int i = 1; i < d; ++i) {
    for (int j = 1; j < d; ++j) {
      if (i != j && std::abs(i - j) == 1) {
        out.record("serre_e", max_abs_diff(E[i] * E[j] * E[i],
                                           (E[i] * E[i] * E[j] + E[j] * E[i] * E[i]) / two));
        out.record("serre_f", max_abs_diff(F[i] * F[j] * F[i],
                                           (F[i] * F[i] * F[j] + F[j] * F[i] * F[i]) / two));
      }
      if (i != j) out.record("e_f_mixed", max_abs_diff(E[i] * F[j], F[j] * E[i]));
      if (std::abs(i - j) >= 2) {
        out.record("e_far_commute", max_abs_diff(E[i] * E[j], E[j] * E[i]));
        out.record("f_far_commute", max_abs_diff(F[i] * F[j], F[j] * F[i]));
      }
    }
  }
  return out;
}

}  // namespace qschur
