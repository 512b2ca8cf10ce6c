#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qschur/labeled_matrix.hpp"
#include "qschur/qarith.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

/// One level of the insertion chain. At level k the box added to
/// sh(t^{(k)}) sits in row to_row; from_row is the row used one level down.
/// A level is a bump when t has a k in from_row (that k is displaced).
struct ChainStep {
  int level = 0;
  int from_row = 0;
  int to_row = 0;
  bool bump = false;
};

/// Data shared by the reduced Wigner coefficients of one (s, t, i).
struct WignerContext {
  SemiStandardTableau t;
  SemiStandardTableau s;
  int i = 0;
  int top = 0;    // highest level considered
  int row_i = 0;  // row of the box added at level i
  std::vector<ChainStep> steps;  // levels i+1..top

  /// Bump letters i = i_1 < i_2 < ... in order.
  std::vector<int> bump_chain() const;

  /// nullopt when s cannot arise from inserting i into t: the levels below
  /// i must agree and every level from i up must grow by one box.
  static std::optional<WignerContext> make(const SemiStandardTableau& s,
                                           const SemiStandardTableau& t, int i,
                                           std::optional<int> d = std::nullopt);
};

/// Type-zero coefficient for placing letter `level` in row r of t at that
/// level.
LogScalar w0_at(const SemiStandardTableau& t, int level, int r, const QParam& q);
/// Type-one coefficient for the level where the box moves from row r1
/// (level-1) to row r2 (level).
LogScalar w1_at(const SemiStandardTableau& t, int level, int r1, int r2, const QParam& q);

LogScalar w0(const WignerContext& ctx, const QParam& q);
LogScalar w1(const WignerContext& ctx, const ChainStep& step, const QParam& q);

/// Shape forms: `top` = sh(t^{(level)}), `below` = sh(t^{(level-1)}).
LogScalar w0_shapes(const Partition& top, const Partition& below, int level, int r,
                    const QParam& q);
LogScalar w1_shapes(const Partition& top, const Partition& below, int level, int r1, int r2,
                    const QParam& q);
int w0_limit_shapes(const Partition& top, const Partition& below, int level, int r,
                    QParam::Kind limit);
int w1_limit_shapes(const Partition& top, const Partition& below, int level, int r1, int r2,
                    QParam::Kind limit);

/// Limits at a symbolic endpoint from the leading terms of the same formulas.
int w0_limit_at(const SemiStandardTableau& t, int level, int r, QParam::Kind limit);
int w1_limit_at(const SemiStandardTableau& t, int level, int r1, int r2, QParam::Kind limit);
int w0_limit(const WignerContext& ctx, QParam::Kind limit);
int w1_limit(const WignerContext& ctx, const ChainStep& step, QParam::Kind limit);

/// <s|t,i>: the type-zero factor times the type-one factors of the bump
/// chain. Zero when s is unreachable. Symbolic q uses the limits.
double wigner(const SemiStandardTableau& s, const SemiStandardTableau& t, int i, const QParam& q,
              std::optional<int> d = std::nullopt);
/// <s|t,i> by peeling off the top letter d one level at a time.
double wigner_recursive(const SemiStandardTableau& s, const SemiStandardTableau& t, int i, int d,
                        const QParam& q);

/// Nonzero <s|t,i> over all s, ordered by (shape descending, s).
std::vector<std::pair<SemiStandardTableau, double>> pieri_column(const SemiStandardTableau& t,
                                                                 int i, int d, const QParam& q);

/// Level-d coefficients as a square matrix, for a fixed level-d shape λ of
/// t and a fixed level-(d-1) shape μ' of s. Columns are the inputs: "i=d"
/// (t^{(d-1)} has shape μ') and "r1=k" (t^{(d-1)} is μ' less a box in row k).
/// Rows "r2=k" are the rows of the box added to λ. Only inputs and outputs
/// compatible with (λ, μ') appear.
LabeledMatrix reduced_wigner_transform(const Partition& lambda, const Partition& mu_below, int d,
                                       const QParam& q);

/// Sparse Pieri columns for V^λ ⊗ V.
struct PieriEntry {
  int cover = 0;            // index into PieriColumns::covers
  std::size_t target = 0;   // index into SSYT(covers[cover], d)
  double value = 0.0;
};

struct PieriColumns {
  Partition lambda;
  int d = 0;
  std::vector<Partition> covers;           // covers of λ with <= d rows
  std::vector<std::vector<PieriEntry>> columns;  // index t * d + (i - 1)
};

PieriColumns pieri_columns(const Partition& lambda, int d, const QParam& q);

/// Rows (μ, s) over covers μ in order, columns (t, i) with t major.
LabeledMatrix pieri_matrix(const Partition& lambda, int d, const QParam& q);

}  // namespace qschur
