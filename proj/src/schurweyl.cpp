#include "qschur/schurweyl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "qschur/gtj.hpp"
#include "qschur/hecke.hpp"
#include "qschur/insertion.hpp"
#include "qschur/parallel.hpp"
#include "qschur/pieri.hpp"

namespace qschur {

std::string to_text(const SchurBasisLabel& label) {
  return to_text(label.lambda) + ";" + to_text(label.P) + ";" + to_text(label.Q);
}

std::vector<SchurBasisLabel> schur_basis(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  std::vector<SchurBasisLabel> out;
  for (const auto& lambda : partitions_of(n, d))
    for (const auto& P : cached_ssyt(lambda, d))
      for (const auto& Q : cached_syt(lambda)) out.push_back({lambda, P, Q});
  return out;
}

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Block {
  Partition lambda;
  std::size_t P = 0;
  std::size_t Q = 0;
  std::size_t offset = 0;
};

// Register after k letters: shapes λ ⊢ k, each holding (P, Q, unread suffix).
struct Layer {
  std::vector<Block> blocks;
  std::size_t suffix = 1;
  std::size_t total = 0;
};

struct Stage {
  std::vector<PieriColumns> pieri;  // per block of the input layer
  // [block][q][cover] -> index of the extended recording tableau
  std::vector<std::vector<std::vector<std::size_t>>> qmap;
  std::vector<std::vector<std::size_t>> cover_block;  // [block][cover] -> output block
  std::uint64_t multiply_adds = 0;
};

struct Plan {
  int n = 0;
  int d = 0;
  std::vector<Layer> layers;
  std::vector<Stage> stages;
};

std::size_t ipow(std::size_t base, int e) {
  std::size_t v = 1;
  for (int k = 0; k < e; ++k) v *= base;
  return v;
}

Plan make_plan(int n, int d, const QParam& q) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  Plan plan;
  plan.n = n;
  plan.d = d;
  for (int k = 0; k <= n; ++k) {
    Layer layer;
    layer.suffix = ipow(static_cast<std::size_t>(d), n - k);
    for (const auto& lambda : partitions_of(k, d)) {
      Block b{lambda, cached_ssyt(lambda, d).size(), cached_syt(lambda).size(), layer.total};
      layer.total += b.P * b.Q * layer.suffix;
      layer.blocks.push_back(std::move(b));
    }
    plan.layers.push_back(std::move(layer));
  }
  for (int k = 1; k <= n; ++k) {
    const auto& in = plan.layers[k - 1];
    const auto& out = plan.layers[k];
    Stage st;
    for (const auto& blk : in.blocks) {
      auto pc = pieri_columns(blk.lambda, d, q);
      std::vector<std::size_t> cover_block;
      std::vector<int> cover_row;
      for (const auto& mu : pc.covers) {
        auto it = std::find_if(out.blocks.begin(), out.blocks.end(),
                               [&](const Block& b) { return b.lambda == mu; });
        cover_block.push_back(static_cast<std::size_t>(it - out.blocks.begin()));
        for (int r = 1; r <= mu.length(); ++r)
          if (mu.row(r) != blk.lambda.row(r)) {
            cover_row.push_back(r);
            break;
          }
      }
      std::vector<std::vector<std::size_t>> qmap;
      for (const auto& Q : cached_syt(blk.lambda)) {
        std::vector<std::size_t> row;
        for (std::size_t c = 0; c < pc.covers.size(); ++c) {
          const auto& targets = cached_syt(pc.covers[c]);
          const auto extended = Q.with_entry(cover_row[c], k);
          row.push_back(static_cast<std::size_t>(
              std::find(targets.begin(), targets.end(), extended) - targets.begin()));
        }
        qmap.push_back(std::move(row));
      }
      std::uint64_t nnz = 0;
      for (const auto& col : pc.columns) nnz += col.size();
      st.multiply_adds += nnz * blk.Q * out.suffix;
      st.pieri.push_back(std::move(pc));
      st.qmap.push_back(std::move(qmap));
      st.cover_block.push_back(std::move(cover_block));
    }
    plan.stages.push_back(std::move(st));
  }
  return plan;
}

// One stage over columns [c0, c1) and unread suffixes [s0, s1). Forward
// scatters layer k-1 into layer k; inverse gathers back with the transpose.
void run_stage(const Plan& plan, int k, bool forward, const RowMatrix& src, RowMatrix& dst,
               std::size_t s0, std::size_t s1, Eigen::Index c0, Eigen::Index c1) {
  const auto& st = plan.stages[k - 1];
  const auto& lin = plan.layers[k - 1];
  const auto& lout = plan.layers[k];
  const std::size_t d = static_cast<std::size_t>(plan.d);
  const Eigen::Index width = c1 - c0;
  for (std::size_t a = 0; a < lin.blocks.size(); ++a) {
    const auto& blk = lin.blocks[a];
    const auto& pc = st.pieri[a];
    for (std::size_t p = 0; p < blk.P; ++p) {
      for (std::size_t letter = 0; letter < d; ++letter) {
        const auto& entries = pc.columns[p * d + letter];
        for (std::size_t qi = 0; qi < blk.Q; ++qi) {
          const std::size_t in_base =
              blk.offset + (p * blk.Q + qi) * lin.suffix + letter * lout.suffix;
          for (const auto& e : entries) {
            const auto& ob = lout.blocks[st.cover_block[a][e.cover]];
            const std::size_t out_base =
                ob.offset + (e.target * ob.Q + st.qmap[a][qi][e.cover]) * lout.suffix;
            for (std::size_t s = s0; s < s1; ++s) {
              const auto i_row = static_cast<Eigen::Index>(in_base + s);
              const auto o_row = static_cast<Eigen::Index>(out_base + s);
              if (forward)
                dst.block(o_row, c0, 1, width) += e.value * src.block(i_row, c0, 1, width);
              else
                dst.block(i_row, c0, 1, width) += e.value * src.block(o_row, c0, 1, width);
            }
          }
        }
      }
    }
  }
}

RowMatrix apply_plan(const Plan& plan, RowMatrix x, Direction direction) {
  const bool forward = direction == Direction::forward;
  const Eigen::Index cols = x.cols();
  for (int step = 1; step <= plan.n; ++step) {
    const int k = forward ? step : plan.n + 1 - step;
    const auto& target = plan.layers[forward ? k : k - 1];
    RowMatrix y = RowMatrix::Zero(static_cast<Eigen::Index>(target.total), cols);
    const std::size_t suffix = plan.layers[k].suffix;
    if (static_cast<std::size_t>(cols) >= worker_count() || suffix < 64) {
      parallel_for(static_cast<std::size_t>(cols), [&](std::size_t c0, std::size_t c1) {
        run_stage(plan, k, forward, x, y, 0, suffix, static_cast<Eigen::Index>(c0),
                  static_cast<Eigen::Index>(c1));
      });
    } else {
      parallel_for(
          suffix,
          [&](std::size_t s0, std::size_t s1) { run_stage(plan, k, forward, x, y, s0, s1, 0, cols); },
          16);
    }
    x = std::move(y);
  }
  return x;
}

}  // namespace

Eigen::MatrixXd schur_apply(const Eigen::MatrixXd& states, Direction direction, int n, int d,
                            const QParam& q, ApplyStats* stats) {
  const Plan plan = make_plan(n, d, q);
  const auto dim = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), n));
  if (states.rows() != dim)
    throw std::invalid_argument("state has " + std::to_string(states.rows()) +
                                " amplitudes, expected " + std::to_string(dim));
  if (stats) {
    stats->multiply_adds = 0;
    for (const auto& st : plan.stages) stats->multiply_adds += st.multiply_adds;
    stats->stages = n;
  }
  return apply_plan(plan, RowMatrix(states), direction);
}

Eigen::VectorXd schur_apply(const Eigen::VectorXd& state, Direction direction, int n, int d,
                            const QParam& q, ApplyStats* stats) {
  Eigen::MatrixXd m = state;
  return schur_apply(m, direction, n, d, q, stats).col(0);
}

LabeledMatrix schur_transform_dense(int n, int d, const QParam& q, std::size_t cap) {
  const std::size_t dim = ipow(static_cast<std::size_t>(d), n);
  if (dim > cap)
    throw std::length_error("d^n = " + std::to_string(dim) + " exceeds the dense cap " +
                            std::to_string(cap));
  LabeledMatrix m;
  for (const auto& label : schur_basis(n, d)) m.row_labels.push_back(to_text(label));
  for (const auto& w : all_words(n, d)) m.col_labels.push_back(word_to_text(w));
  const Plan plan = make_plan(n, d, q);
  m.values = apply_plan(plan, RowMatrix::Identity(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim)),
                        Direction::forward);
  return m;
}

std::vector<CrystalImage> crystal_limit_transform(int n, int d, QParam::Kind limit) {
  if (limit == QParam::Kind::finite) throw std::invalid_argument("crystal limits need a symbolic q");
  const QParam q = limit == QParam::Kind::zero ? QParam::zero() : QParam::infinity();
  const Plan plan = make_plan(n, d, q);
  std::vector<CrystalImage> out;
  for (const auto& w : all_words(n, d)) {
    std::size_t a = 0, p = 0, qi = 0;
    int sign = 1;
    for (int k = 1; k <= n; ++k) {
      const auto& st = plan.stages[k - 1];
      const auto& entries = st.pieri[a].columns[p * static_cast<std::size_t>(d) + (w[k - 1] - 1)];
      if (entries.size() != 1 || std::abs(entries[0].value) != 1.0)
        throw std::logic_error("Pieri column at a crystal limit is not a signed unit vector");
      const auto& e = entries[0];
      sign *= e.value > 0 ? 1 : -1;
      qi = st.qmap[a][qi][e.cover];
      p = e.target;
      a = st.cover_block[a][e.cover];
    }
    const auto& blk = plan.layers[n].blocks[a];
    out.push_back({blk.offset + p * blk.Q + qi, sign});
  }
  return out;
}

// ---------------------------------------------------------------- verification

double IntertwinerReport::max() const {
  return std::max({off_block, hecke_residual, qgroup_residual, k_half_residual});
}

namespace {

enum class SignSource { both, hecke, qgroup };

struct Family {
  std::string name;
  Eigen::MatrixXd word;                 // action on words
  std::vector<Eigen::MatrixXd> blocks;  // expected block per shape
  bool hecke = false;
  bool diagonal = false;
};

IntertwinerReport verify(int n, int d, const QParam& q, SignSource source) {
  if (!q.is_finite()) throw std::invalid_argument("intertwiner checks need a finite q");
  const auto U = schur_transform_dense(n, d, q).values;
  const auto shapes = partitions_of(n, d);
  std::vector<std::size_t> offsets, sizes, qsizes;
  std::size_t off = 0;
  for (const auto& lambda : shapes) {
    offsets.push_back(off);
    qsizes.push_back(cached_syt(lambda).size());
    sizes.push_back(cached_ssyt(lambda, d).size() * qsizes.back());
    off += sizes.back();
  }

  std::vector<Family> families;
  for (int i = 1; i < n; ++i) {
    Family f{"T" + std::to_string(i), t_action_word(n, d, i, q), {}, true, false};
    for (const auto& lambda : shapes) {
      const auto P = static_cast<Eigen::Index>(cached_ssyt(lambda, d).size());
      const Eigen::MatrixXd Y = t_matrix_yyh(lambda, i, q);
      Eigen::MatrixXd E = Eigen::MatrixXd::Zero(P * Y.rows(), P * Y.cols());
      for (Eigen::Index a = 0; a < P; ++a) E.block(a * Y.rows(), a * Y.cols(), Y.rows(), Y.cols()) = Y;
      f.blocks.push_back(std::move(E));
    }
    families.push_back(std::move(f));
  }
  std::vector<Generator> gens;
  for (int i = 1; i < d; ++i) {
    gens.push_back(Generator::e(i));
    gens.push_back(Generator::f(i));
  }
  for (int i = 1; i <= d; ++i) gens.push_back(Generator::k_half(i));
  for (const auto& g : gens) {
    const char* tag = g.kind == Generator::Kind::e ? "e" : (g.kind == Generator::Kind::f ? "f" : "k");
    Family f{tag + std::to_string(g.index), word_generator_action(n, d, g, q), {}, false,
             g.kind == Generator::Kind::k_half};
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      const Eigen::MatrixXd G = generator_matrix(shapes[s], d, g, q);
      const auto Qn = static_cast<Eigen::Index>(qsizes[s]);
      Eigen::MatrixXd E = Eigen::MatrixXd::Zero(G.rows() * Qn, G.cols() * Qn);
      for (Eigen::Index a = 0; a < G.rows(); ++a)
        for (Eigen::Index b = 0; b < G.cols(); ++b)
          if (G(a, b) != 0.0)
            E.block(a * Qn, b * Qn, Qn, Qn) = G(a, b) * Eigen::MatrixXd::Identity(Qn, Qn);
      f.blocks.push_back(std::move(E));
    }
    families.push_back(std::move(f));
  }

  IntertwinerReport rep;
  std::vector<Eigen::MatrixXd> conj;
  for (const auto& f : families) {
    conj.push_back(U * f.word * U.transpose());
    const auto& M = conj.back();
    double outside = 0.0;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      const auto o = static_cast<Eigen::Index>(offsets[s]);
      const auto z = static_cast<Eigen::Index>(sizes[s]);
      Eigen::MatrixXd masked = M.middleRows(o, z);
      masked.middleCols(o, z).setZero();
      if (masked.size() > 0) outside = std::max(outside, masked.cwiseAbs().maxCoeff());
    }
    rep.off_block = std::max(rep.off_block, outside);
    rep.detail.record("off_block_" + f.name, outside);
  }

  constexpr double edge = 1e-8;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto o = static_cast<Eigen::Index>(offsets[s]);
    const auto z = static_cast<Eigen::Index>(sizes[s]);
    std::vector<int> sign(sizes[s], 0);
    // Spread signs along nonzero expected entries of the chosen families.
    for (std::size_t root = 0; root < sizes[s]; ++root) {
      if (sign[root] != 0) continue;
      sign[root] = 1;
      std::deque<std::size_t> todo{root};
      while (!todo.empty()) {
        const auto a = todo.front();
        todo.pop_front();
        for (std::size_t fi = 0; fi < families.size(); ++fi) {
          const auto& f = families[fi];
          if (f.diagonal) continue;
          if (source == SignSource::hecke && !f.hecke) continue;
          if (source == SignSource::qgroup && f.hecke) continue;
          const auto& E = f.blocks[s];
          for (Eigen::Index b = 0; b < z; ++b) {
            const auto ai = static_cast<Eigen::Index>(a);
            for (const auto& [x, y] : {std::pair{ai, b}, std::pair{b, ai}}) {
              if (std::abs(E(x, y)) < edge || sign[b] != 0) continue;
              const double m = conj[fi](o + x, o + y);
              sign[b] = sign[a] * ((m * E(x, y) >= 0) ? 1 : -1);
              todo.push_back(static_cast<std::size_t>(b));
            }
          }
        }
      }
    }
    Eigen::VectorXd D(z);
    for (Eigen::Index k = 0; k < z; ++k) D[k] = sign[static_cast<std::size_t>(k)];
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      const auto& f = families[fi];
      const Eigen::MatrixXd expected = D.asDiagonal() * f.blocks[s] * D.asDiagonal();
      const double r = max_abs_diff(conj[fi].block(o, o, z, z), expected);
      rep.detail.record(f.name, r);
      if (f.diagonal)
        rep.k_half_residual = std::max(rep.k_half_residual, r);
      else if (f.hecke)
        rep.hecke_residual = std::max(rep.hecke_residual, r);
      else
        rep.qgroup_residual = std::max(rep.qgroup_residual, r);
    }
    rep.signs[shapes[s]] = std::move(sign);
  }
  return rep;
}

}  // namespace

IntertwinerReport verify_intertwiners(int n, int d, const QParam& q) {
  return verify(n, d, q, SignSource::both);
}

IntertwinerReport verify_intertwiner_hecke(int n, int d, const QParam& q) {
  return verify(n, d, q, SignSource::hecke);
}

IntertwinerReport verify_intertwiner_qgroup(int n, int d, const QParam& q) {
  return verify(n, d, q, SignSource::qgroup);
}

}  // namespace qschur
