#include "qschur/pieri.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qschur/parallel.hpp"

namespace qschur {

namespace {

// sign * q^{twice_exp/2} * sqrt(prod [num] / prod [den]), or exactly zero.
struct Factor {
  bool zero = false;
  int sign = 1;
  long twice_exp = 0;
  std::vector<long> num;
  std::vector<long> den;
};

LogScalar evaluate(const Factor& f, const QParam& q) {
  if (f.zero) return LogScalar::zero();
  LogScalar radicand = LogScalar::one();
  for (long a : f.num) radicand *= signed_qint(a, q);
  for (long a : f.den) radicand /= signed_qint(a, q);
  if (radicand.sign() < 0) throw std::logic_error("negative radicand in a Wigner coefficient");
  LogScalar v = radicand.sqrt() * qpow_half(f.twice_exp, q);
  return f.sign < 0 ? -v : v;
}

int evaluate_limit(const Factor& f, QParam::Kind limit) {
  if (f.zero) return 0;
  LeadingTerm radicand;
  for (long a : f.num) radicand *= leading_qint(a, limit);
  for (long a : f.den) radicand /= leading_qint(a, limit);
  if (radicand.sign < 0) throw std::logic_error("negative radicand in a Wigner coefficient");
  LeadingTerm v = radicand.sqrt() * leading_qpow_half(f.twice_exp, limit);
  return f.sign * limit_value(v, limit);
}

// Content of the end of row p.
long end_of(const Partition& shape, int p) { return shape.row(p) - p; }

bool addable(const Partition& shape, int r, int max_row) {
  return r >= 1 && r <= max_row && (r == 1 || shape.row(r - 1) > shape.row(r));
}

Factor w0_factor(const Partition& top, const Partition& below, int level, int r) {
  Factor f;
  if (!addable(top, r, level)) {
    f.zero = true;
    return f;
  }
  const long cr = end_of(top, r);
  for (int p = 1; p <= level - 1; ++p) {
    const long a = end_of(below, p) - cr - 1;
    if (a == 0) f.zero = true;
    f.num.push_back(a);
  }
  for (int p = 1; p <= level; ++p)
    if (p != r) f.den.push_back(end_of(top, p) - cr);
  f.twice_exp = (cr + 1) - (top.size() - below.size());
  return f;
}

Factor w1_factor(const Partition& top, const Partition& below, int level, int r1, int r2) {
  Factor f;
  if (!addable(below, r1, level - 1) || !addable(top, r2, level)) {
    f.zero = true;
    return f;
  }
  const long c1 = end_of(below, r1);
  const long c2 = end_of(top, r2);
  for (int p = 1; p <= level; ++p) {
    if (p == r2) continue;
    const long a = end_of(top, p) - c1;
    if (a == 0) f.zero = true;
    f.num.push_back(a);
    f.den.push_back(end_of(top, p) - c2);
  }
  for (int p = 1; p <= level - 1; ++p) {
    if (p == r1) continue;
    const long a = end_of(below, p) - c2 - 1;
    if (a == 0) f.zero = true;
    f.num.push_back(a);
    f.den.push_back(end_of(below, p) - c1 - 1);
  }
  f.sign = r2 > r1 ? -1 : 1;
  f.twice_exp = (c1 + 1) - (c2 + 1);
  return f;
}

// Row where `outer` has one more box than `inner`, or 0 if it does not cover.
int added_row(const Partition& inner, const Partition& outer) {
  if (!covers(inner, outer)) return 0;
  for (int r = 1; r <= outer.length(); ++r)
    if (outer.row(r) != inner.row(r)) return r;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------- coefficients

LogScalar w0_shapes(const Partition& top, const Partition& below, int level, int r,
                    const QParam& q) {
  return evaluate(w0_factor(top, below, level, r), q);
}

LogScalar w1_shapes(const Partition& top, const Partition& below, int level, int r1, int r2,
                    const QParam& q) {
  return evaluate(w1_factor(top, below, level, r1, r2), q);
}

int w0_limit_shapes(const Partition& top, const Partition& below, int level, int r,
                    QParam::Kind limit) {
  return evaluate_limit(w0_factor(top, below, level, r), limit);
}

int w1_limit_shapes(const Partition& top, const Partition& below, int level, int r1, int r2,
                    QParam::Kind limit) {
  return evaluate_limit(w1_factor(top, below, level, r1, r2), limit);
}

LogScalar w0_at(const SemiStandardTableau& t, int level, int r, const QParam& q) {
  return w0_shapes(t.restricted_shape(level), t.restricted_shape(level - 1), level, r, q);
}

LogScalar w1_at(const SemiStandardTableau& t, int level, int r1, int r2, const QParam& q) {
  return w1_shapes(t.restricted_shape(level), t.restricted_shape(level - 1), level, r1, r2, q);
}

int w0_limit_at(const SemiStandardTableau& t, int level, int r, QParam::Kind limit) {
  return w0_limit_shapes(t.restricted_shape(level), t.restricted_shape(level - 1), level, r, limit);
}

int w1_limit_at(const SemiStandardTableau& t, int level, int r1, int r2, QParam::Kind limit) {
  return w1_limit_shapes(t.restricted_shape(level), t.restricted_shape(level - 1), level, r1, r2,
                         limit);
}

std::vector<int> WignerContext::bump_chain() const {
  std::vector<int> chain{i};
  for (const auto& st : steps)
    if (st.bump) chain.push_back(st.level);
  return chain;
}

std::optional<WignerContext> WignerContext::make(const SemiStandardTableau& s,
                                                 const SemiStandardTableau& t, int i,
                                                 std::optional<int> d) {
  if (i < 1) throw std::invalid_argument("letters must be >= 1");
  WignerContext ctx;
  ctx.t = t;
  ctx.s = s;
  ctx.i = i;
  ctx.top = d.value_or(std::max({i, t.max_entry(), s.max_entry()}));
  if (i > ctx.top || s.max_entry() > ctx.top || t.max_entry() > ctx.top) return std::nullopt;
  if (s.size() != t.size() + 1) return std::nullopt;
  for (int k = 1; k < i; ++k)
    if (s.restricted_shape(k) != t.restricted_shape(k)) return std::nullopt;
  ctx.row_i = added_row(t.restricted_shape(i), s.restricted_shape(i));
  if (ctx.row_i == 0) return std::nullopt;
  int prev = ctx.row_i;
  for (int k = i + 1; k <= ctx.top; ++k) {
    const int r = added_row(t.restricted_shape(k), s.restricted_shape(k));
    if (r == 0) return std::nullopt;
    const bool bump = t.restricted_row(prev, k) > t.restricted_row(prev, k - 1);
    ctx.steps.push_back({k, prev, r, bump});
    prev = r;
  }
  return ctx;
}

LogScalar w0(const WignerContext& ctx, const QParam& q) {
  return w0_at(ctx.t, ctx.i, ctx.row_i, q);
}

LogScalar w1(const WignerContext& ctx, const ChainStep& step, const QParam& q) {
  return w1_at(ctx.t, step.level, step.from_row, step.to_row, q);
}

int w0_limit(const WignerContext& ctx, QParam::Kind limit) {
  return w0_limit_at(ctx.t, ctx.i, ctx.row_i, limit);
}

int w1_limit(const WignerContext& ctx, const ChainStep& step, QParam::Kind limit) {
  return w1_limit_at(ctx.t, step.level, step.from_row, step.to_row, limit);
}

double wigner(const SemiStandardTableau& s, const SemiStandardTableau& t, int i, const QParam& q,
              std::optional<int> d) {
  const auto ctx = WignerContext::make(s, t, i, d);
  if (!ctx) return 0.0;
  if (q.is_symbolic()) {
    int v = w0_limit(*ctx, q.kind());
    for (const auto& st : ctx->steps)
      if (st.bump && v != 0) v *= w1_limit(*ctx, st, q.kind());
    return v;
  }
  LogScalar v = w0(*ctx, q);
  for (const auto& st : ctx->steps)
    if (st.bump) v *= w1(*ctx, st, q);
  return v.value();
}

double wigner_recursive(const SemiStandardTableau& s, const SemiStandardTableau& t, int i, int d,
                        const QParam& q) {
  if (i > d || d < 1) return 0.0;
  const Partition t_top = t.restricted_shape(d);
  const Partition t_below = t.restricted_shape(d - 1);
  const Partition s_below = s.restricted_shape(d - 1);
  const int r2 = added_row(t_top, s.restricted_shape(d));
  if (r2 == 0) return 0.0;
  if (i == d) {
    if (s_below != t_below) return 0.0;
    return q.is_symbolic() ? w0_limit_shapes(t_top, t_below, d, r2, q.kind())
                           : w0_shapes(t_top, t_below, d, r2, q).value();
  }
  const int r1 = added_row(t_below, s_below);
  if (r1 == 0) return 0.0;
  const double step = q.is_symbolic() ? w1_limit_shapes(t_top, t_below, d, r1, r2, q.kind())
                                      : w1_shapes(t_top, t_below, d, r1, r2, q).value();
  if (step == 0.0) return 0.0;
  return step * wigner_recursive(s.restrict_to(d - 1), t.restrict_to(d - 1), i, d - 1, q);
}

// ---------------------------------------------------------------- columns

std::vector<std::pair<SemiStandardTableau, double>> pieri_column(const SemiStandardTableau& t,
                                                                 int i, int d, const QParam& q) {
  if (i < 1 || i > d) throw std::invalid_argument("letter out of range");
  if (t.max_entry() > d) throw std::invalid_argument("tableau has entries above d");
  // rows[k] = row of the box added at level k, for k = i..d.
  std::vector<std::vector<int>> chains;
  std::vector<int> cur(d + 1, 0);
  auto extend = [&](auto&& self, int level) -> void {
    if (level > d) {
      chains.push_back(cur);
      return;
    }
    const Partition shape = t.restricted_shape(level);
    if (level > i && t.restricted_row(cur[level - 1], level) ==
                         t.restricted_row(cur[level - 1], level - 1)) {
      cur[level] = cur[level - 1];
      self(self, level + 1);
      return;
    }
    for (int r = 1; r <= std::min(level, shape.length() + 1); ++r) {
      if (!addable(shape, r, level)) continue;
      cur[level] = r;
      self(self, level + 1);
    }
  };
  extend(extend, i);

  std::vector<std::pair<SemiStandardTableau, double>> out;
  for (const auto& rho : chains) {
    const int len = std::max(t.shape().length(), *std::max_element(rho.begin(), rho.end()));
    std::vector<std::vector<int>> rows(len);
    for (int p = 1; p <= len; ++p) {
      int prev = 0;
      for (int k = 1; k <= d; ++k) {
        const int m = t.restricted_row(p, k) + (k >= i && rho[k] == p ? 1 : 0);
        for (int c = prev; c < m; ++c) rows[p - 1].push_back(k);
        prev = std::max(prev, m);
      }
    }
    Tableau candidate(rows);
    if (!candidate.is_semistandard(d)) continue;
    auto s = SemiStandardTableau::trusted(std::move(rows));
    const double v = wigner(s, t, i, q, d);
    if (v != 0.0) out.emplace_back(std::move(s), v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto sa = a.first.shape(), sb = b.first.shape();
    if (sa != sb) return sa > sb;
    return a.first < b.first;
  });
  return out;
}

LabeledMatrix reduced_wigner_transform(const Partition& lambda, const Partition& mu_below, int d,
                                       const QParam& q) {
  if (lambda.length() > d || mu_below.length() > d - 1)
    throw std::invalid_argument("shapes exceed the level");
  auto interlaces = [](const Partition& outer, const Partition& inner) {
    return outer.contains(inner) && is_horizontal_strip(SkewShape(outer, inner));
  };
  struct Input {
    int r1;  // 0 for "i=d"
    Partition below;
  };
  std::vector<Input> inputs;
  if (interlaces(lambda, mu_below)) inputs.push_back({0, mu_below});
  for (int r1 = 1; r1 <= mu_below.length(); ++r1) {
    if (mu_below.row(r1) <= mu_below.row(r1 + 1)) continue;
    std::vector<int> parts = mu_below.parts();
    --parts[r1 - 1];
    Partition below(parts);
    if (interlaces(lambda, below)) inputs.push_back({r1, below});
  }
  std::vector<int> outputs;
  for (int r2 : lambda.addable_rows()) {
    if (r2 > d) continue;
    if (interlaces(lambda.with_box(r2), mu_below)) outputs.push_back(r2);
  }
  LabeledMatrix m;
  m.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(outputs.size()),
                                   static_cast<Eigen::Index>(inputs.size()));
  for (int r2 : outputs) m.row_labels.push_back("r2=" + std::to_string(r2));
  for (std::size_t c = 0; c < inputs.size(); ++c) {
    const auto& in = inputs[c];
    m.col_labels.push_back(in.r1 == 0 ? "i=" + std::to_string(d) : "r1=" + std::to_string(in.r1));
    for (std::size_t r = 0; r < outputs.size(); ++r) {
      const auto idx = std::pair{static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)};
      if (q.is_symbolic()) {
        m.values(idx.first, idx.second) =
            in.r1 == 0 ? w0_limit_shapes(lambda, in.below, d, outputs[r], q.kind())
                       : w1_limit_shapes(lambda, in.below, d, in.r1, outputs[r], q.kind());
      } else {
        m.values(idx.first, idx.second) =
            (in.r1 == 0 ? w0_shapes(lambda, in.below, d, outputs[r], q)
                        : w1_shapes(lambda, in.below, d, in.r1, outputs[r], q))
                .value();
      }
    }
  }
  return m;
}

PieriColumns pieri_columns(const Partition& lambda, int d, const QParam& q) {
  PieriColumns pc;
  pc.lambda = lambda;
  pc.d = d;
  pc.covers = covering_partitions(lambda, d);
  std::vector<BasisIndex<SemiStandardTableau>> indices;
  for (const auto& mu : pc.covers) indices.emplace_back(cached_ssyt(mu, d));
  const auto& basis = cached_ssyt(lambda, d);
  pc.columns.resize(basis.size() * static_cast<std::size_t>(d));
  parallel_for(pc.columns.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t col = begin; col < end; ++col) {
      const auto& t = basis[col / static_cast<std::size_t>(d)];
      const int i = static_cast<int>(col % static_cast<std::size_t>(d)) + 1;
      for (auto& [s, v] : pieri_column(t, i, d, q)) {
        const auto it = std::find(pc.covers.begin(), pc.covers.end(), s.shape());
        const int cover = static_cast<int>(it - pc.covers.begin());
        pc.columns[col].push_back({cover, indices[cover].at(s), v});
      }
    }
  });
  return pc;
}

LabeledMatrix pieri_matrix(const Partition& lambda, int d, const QParam& q) {
  const auto pc = pieri_columns(lambda, d, q);
  const auto& basis = cached_ssyt(lambda, d);
  LabeledMatrix m;
  std::vector<std::size_t> offsets;
  for (const auto& mu : pc.covers) {
    offsets.push_back(m.row_labels.size());
    for (const auto& s : cached_ssyt(mu, d)) m.row_labels.push_back(to_text(mu) + ";" + to_text(s));
  }
  for (const auto& t : basis)
    for (int i = 1; i <= d; ++i) m.col_labels.push_back(to_text(t) + ";" + std::to_string(i));
  m.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.row_labels.size()),
                                   static_cast<Eigen::Index>(m.col_labels.size()));
  for (std::size_t col = 0; col < pc.columns.size(); ++col)
    for (const auto& e : pc.columns[col])
      m.values(static_cast<Eigen::Index>(offsets[e.cover] + e.target),
               static_cast<Eigen::Index>(col)) = e.value;
  return m;
}

}  // namespace qschur
