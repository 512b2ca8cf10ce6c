#include "qschur/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "qschur/gtj.hpp"
#include "qschur/hecke.hpp"
#include "qschur/pieri.hpp"
#include "qschur/schurweyl.hpp"

namespace qschur {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::to_json(const std::string& suite, int n, int d, double tolerance) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["n"] = n;
  j["d"] = d;
  j["tolerance"] = tolerance;
  j["pass"] = pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["suite"] = c.suite;
    r["check"] = c.check;
    r["q"] = c.q;
    r["residual"] = std::isfinite(c.residual) ? nlohmann::ordered_json(c.residual) : nlohmann::ordered_json("inf");
    r["pass"] = c.pass;
    j["checks"].push_back(std::move(r));
  }
  return j.dump(1) + "\n";
}

namespace {

struct Recorder {
  SuiteReport& report;
  double tolerance;
  void add(const std::string& suite, const std::string& check, const QParam& q, double residual) {
    report.checks.push_back({suite, check, q.tag(), residual,
                             std::isfinite(residual) && residual <= tolerance});
  }
};

std::vector<Partition> shapes_up_to(int n, int d, int min_size) {
  std::vector<Partition> out;
  for (int m = min_size; m <= n; ++m)
    for (auto& p : partitions_of(m, d)) out.push_back(std::move(p));
  return out;
}

double orthogonality(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m.transpose() * m, Eigen::MatrixXd::Identity(m.cols(), m.cols()));
}

// Distance of m from a signed permutation matrix.
double signed_permutation_residual(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    int units = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double a = std::abs(m(r, c));
      worst = std::max(worst, std::min(a, std::abs(a - 1.0)));
      units += a > 0.5;
    }
    if (units != 1) worst = std::max(worst, 1.0);
  }
  return std::max(worst, orthogonality(m));
}

void qarith_suite(Recorder& rec, const std::vector<QParam>& qs) {
  for (const auto& q : qs) {
    if (!q.is_finite()) continue;
    const double v = q.value();
    double rational = 0.0, symmetry = 0.0, chain = 0.0;
    for (long n = 1; n <= 50; ++n) {
      const double summed = qint_summed(n, v);
      const double ours = qint(n, q).value();
      if (v != 1.0) rational = std::max(rational, std::abs(qint_rational(n, v) / summed - 1.0));
      rational = std::max(rational, std::abs(ours / summed - 1.0));
      symmetry = std::max(symmetry, std::abs(qint(n, QParam::finite(1.0 / v)).value() / ours - 1.0));
    }
    for (long a = 1; a <= 12; ++a)
      for (long b = 1; b <= 12; ++b)
        for (long c = 1; c <= 12; ++c) {
          const double lhs = (qint_ratio(a, b, q) * qint_ratio(b, c, q)).value();
          chain = std::max(chain, std::abs(lhs / qint_ratio(a, c, q).value() - 1.0));
        }
    rec.add("qarith", "rational_vs_summed", q, rational);
    rec.add("qarith", "inversion_symmetry", q, symmetry);
    rec.add("qarith", "ratio_chain", q, chain);
  }
}

void gtj_suite(Recorder& rec, int n, int d, const std::vector<QParam>& qs) {
  for (const auto& q : qs) {
    if (!q.is_finite()) continue;
    for (const auto& lambda : shapes_up_to(n, d, 1))
      rec.add("gtj", "relations " + to_text(lambda), q, verify_serre(lambda, d, q).max());
  }
}

void hecke_suite(Recorder& rec, int n, int d, const std::vector<QParam>& qs) {
  for (const auto& q : qs) {
    if (!q.is_finite()) continue;
    for (const auto& lambda : shapes_up_to(n, n, 2))
      rec.add("hecke", "yyh_relations " + to_text(lambda), q, verify_hecke_relations(lambda, q).max());
    if (n >= 2) rec.add("hecke", "word_relations", q, verify_hecke_relations(n, d, q).max());
    double commute = 0.0;
    for (int i = 1; i < n; ++i) {
      const auto T = t_action_word(n, d, i, q);
      for (int g = 1; g <= d; ++g) {
        std::vector<Generator> gens{Generator::k_half(g)};
        if (g < d) {
          gens.push_back(Generator::e(g));
          gens.push_back(Generator::f(g));
        }
        for (const auto& gen : gens) {
          const auto G = word_generator_action(n, d, gen, q);
          commute = std::max(commute, max_abs_diff(T * G, G * T));
        }
      }
    }
    if (n >= 2) rec.add("hecke", "commutes_with_quantum_group", q, commute);
  }
}

void pieri_suite(Recorder& rec, int n, int d, const std::vector<QParam>& qs) {
  for (const auto& q : qs) {
    for (const auto& lambda : shapes_up_to(n - 1, d, 0)) {
      const auto m = pieri_matrix(lambda, d, q);
      rec.add("pieri", (q.is_finite() ? "orthogonal " : "signed_permutation ") + to_text(lambda), q,
              q.is_finite() ? orthogonality(m.values) : signed_permutation_residual(m.values));
      double recursive = 0.0;
      for (const auto& t : cached_ssyt(lambda, d))
        for (int i = 1; i <= d; ++i)
          for (const auto& [s, v] : pieri_column(t, i, d, q))
            recursive = std::max(recursive, std::abs(v - wigner_recursive(s, t, i, d, q)));
      rec.add("pieri", "recursive_form " + to_text(lambda), q, recursive);
    }
  }
}

void schurweyl_suite(Recorder& rec, int n, int d, const std::vector<QParam>& qs) {
  for (const auto& q : qs) {
    const auto U = schur_transform_dense(n, d, q).values;
    if (!q.is_finite()) {
      rec.add("schurweyl", "signed_permutation", q, signed_permutation_residual(U));
      continue;
    }
    rec.add("schurweyl", "unitarity", q, orthogonality(U));
    const auto rep = verify_intertwiners(n, d, q);
    rec.add("schurweyl", "off_block", q, rep.off_block);
    rec.add("schurweyl", "hecke_intertwiner", q, rep.hecke_residual);
    rec.add("schurweyl", "qgroup_intertwiner", q, rep.qgroup_residual);
    rec.add("schurweyl", "k_half_intertwiner", q, rep.k_half_residual);
  }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int n, int d, const std::vector<QParam>& qs,
                      double tolerance) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  SuiteReport report;
  Recorder rec{report, tolerance};
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "qarith") qarith_suite(rec, qs), known = true;
  if (all || suite == "gtj") gtj_suite(rec, n, d, qs), known = true;
  if (all || suite == "hecke") hecke_suite(rec, n, d, qs), known = true;
  if (all || suite == "pieri") pieri_suite(rec, n, d, qs), known = true;
  if (all || suite == "schurweyl") schurweyl_suite(rec, n, d, qs), known = true;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  return report;
}

}  // namespace qschur
