#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include <Eigen/Dense>

namespace qschur {

/// Largest residual seen per named relation.
struct RelationResiduals {
  std::map<std::string, double> by_relation;

  void record(const std::string& name, double residual) {
    auto [it, fresh] = by_relation.emplace(name, residual);
    if (!fresh) it->second = std::max(it->second, residual);
  }
  void merge(const RelationResiduals& other) {
    for (const auto& [k, v] : other.by_relation) record(k, v);
  }
  double max() const {
    double m = 0.0;
    for (const auto& [k, v] : by_relation) m = std::max(m, v);
    return m;
  }
};

/// Entrywise max |A - B|; NaN entries count as infinite.
inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  const Eigen::MatrixXd d = (a - b).cwiseAbs();
  if (d.hasNaN()) return std::numeric_limits<double>::infinity();
  return d.maxCoeff();
}

}  // namespace qschur
