#pragma once

#include <optional>

#include <Eigen/Dense>

#include "qschur/qarith.hpp"
#include "qschur/residuals.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

struct Generator {
  enum class Kind { e, f, k_half };
  Kind kind;
  int index;  // 1..d-1 for e and f, 1..d for k_half

  static Generator e(int i) { return {Kind::e, i}; }
  static Generator f(int i) { return {Kind::f, i}; }
  static Generator k_half(int i) { return {Kind::k_half, i}; }
};

/// q^{x_i(t)/2}.
double h_eigenvalue(const SemiStandardTableau& t, int i, const QParam& q);

/// t with the last i of row k changed to i+1, when that is still an SSYT.
std::optional<SemiStandardTableau> lower_in_row(const SemiStandardTableau& t, int k, int i);

/// <v_{t_k}| f_i |v_t>; zero when t_k does not exist. Throws on k < 1 or
/// symbolic q.
double f_coefficient(const SemiStandardTableau& t, int k, int i, const QParam& q);

/// How to read the row-length symbols of the uncorrected action formula.
enum class ActionReading {
  strip_lengths,           // boxes of the horizontal strip in row k
  restricted_row_lengths,  // row k of sh(t^{(i)}) and sh(t^{(i+1)})
};

/// The uncorrected action formula, with a_{jk} the axial distance
/// between the ends of rows j and k at level i. NaN when the radicand is
/// negative or a denominator vanishes. Kept for comparison only.
double f_coefficient_as_printed(const SemiStandardTableau& t, int k, int i, const QParam& q,
                                ActionReading reading);

/// Generator acting on V^λ in the canonical SSYT(λ, d) basis.
Eigen::MatrixXd generator_matrix(const Partition& lambda, int d, Generator g, const QParam& q);

/// Iterated coproduct of g on V^{⊗n} in the word basis.
Eigen::MatrixXd word_generator_action(int n, int d, Generator g, const QParam& q);

/// [e_i, f_i] minus the diagonal [m], with m = x_i - x_{i+1} when
/// use_difference is set and m = x_i otherwise. Max over i.
double commutator_residual(const Partition& lambda, int d, const QParam& q, bool use_difference);

/// All U_q(d) relations on V^λ.
RelationResiduals verify_serre(const Partition& lambda, int d, const QParam& q);

}  // namespace qschur
