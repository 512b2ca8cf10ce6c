#pragma once

#include <Eigen/Dense>

#include "qschur/qarith.hpp"
#include "qschur/residuals.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

/// T_i on R^λ in the canonical SYT(λ) basis, with a = res(box of i+1) -
/// res(box of i). Throws on symbolic q or i outside 1..|λ|-1.
Eigen::MatrixXd t_matrix_yyh(const Partition& lambda, int i, const QParam& q);

/// T_i acting on tensor factors i, i+1 of V^{⊗n} in the word basis.
Eigen::MatrixXd t_action_word(int n, int d, int i, const QParam& q);

/// Quadratic, braid and far-commutation residuals on R^λ.
RelationResiduals verify_hecke_relations(const Partition& lambda, const QParam& q);
/// The same relations on the word representation.
RelationResiduals verify_hecke_relations(int n, int d, const QParam& q);

}  // namespace qschur
