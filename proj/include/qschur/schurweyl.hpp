#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qschur/labeled_matrix.hpp"
#include "qschur/qarith.hpp"
#include "qschur/residuals.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

struct SchurBasisLabel {
  Partition lambda;
  SemiStandardTableau P;
  StandardTableau Q;
  friend bool operator==(const SchurBasisLabel&, const SchurBasisLabel&) = default;
};

/// "[2,1];1,2/2;1,3/2".
std::string to_text(const SchurBasisLabel& label);

/// Shapes in descending lexicographic order; inside a shape, P major and Q
/// minor, both in canonical tableau order.
std::vector<SchurBasisLabel> schur_basis(int n, int d);

inline constexpr std::size_t default_dense_cap = 4096;

/// Rows are schur_basis(n, d), columns are words. Symbolic q gives the
/// crystal-limit signed permutation. Throws std::length_error above the cap.
LabeledMatrix schur_transform_dense(int n, int d, const QParam& q,
                                    std::size_t cap = default_dense_cap);

enum class Direction { forward, inverse };

struct ApplyStats {
  std::uint64_t multiply_adds = 0;  // per state vector
  int stages = 0;
};

/// Applies the cascade stage by stage to each column of `states` (forward:
/// word basis to Schur basis; inverse: the transpose). Never forms the
/// d^n x d^n matrix.
Eigen::MatrixXd schur_apply(const Eigen::MatrixXd& states, Direction direction, int n, int d,
                            const QParam& q, ApplyStats* stats = nullptr);
Eigen::VectorXd schur_apply(const Eigen::VectorXd& state, Direction direction, int n, int d,
                            const QParam& q, ApplyStats* stats = nullptr);

/// Where each word goes at a crystal limit.
struct CrystalImage {
  std::size_t label = 0;  // index into schur_basis(n, d)
  int sign = 1;
};

/// Word index -> image, following the single nonzero entry of every Pieri
/// column at the limit. Throws std::logic_error if a column is not a signed
/// unit vector.
std::vector<CrystalImage> crystal_limit_transform(int n, int d, QParam::Kind limit);

struct IntertwinerReport {
  double off_block = 0.0;       // largest entry outside the shape blocks
  double hecke_residual = 0.0;  // after sign recovery
  double qgroup_residual = 0.0;
  double k_half_residual = 0.0;  // q^{h_i/2}, compared without signs
  /// Recovered diagonal signs per shape, in block order.
  std::map<Partition, std::vector<int>> signs;
  RelationResiduals detail;

  double max() const;
};

/// Conjugates the word-basis Hecke and quantum-group generators by the dense
/// transform and compares each shape block with (I ⊗ YYH) and (GTJ ⊗ I)
/// after conjugating by one diagonal sign matrix per shape, recovered from
/// both families together.
IntertwinerReport verify_intertwiners(int n, int d, const QParam& q);
/// Same, with the signs recovered from the Hecke generators alone.
IntertwinerReport verify_intertwiner_hecke(int n, int d, const QParam& q);
/// Same, with the signs recovered from the quantum-group generators alone.
IntertwinerReport verify_intertwiner_qgroup(int n, int d, const QParam& q);

}  // namespace qschur
