#include "qschur/insertion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qschur {

namespace {

using Rows = std::vector<std::vector<int>>;

void require_letter(int i) {
  if (i < 1) throw std::invalid_argument("letters must be >= 1");
}

// Settles the pending bump record, if any, in the row where its letter landed.
void settle(std::vector<BumpRecord>& path, int row) {
  if (!path.empty() && path.back().to_row == 0) path.back().to_row = row;
}

}  // namespace

int bumping_sign(const std::vector<BumpRecord>& path) {
  int s = 1;
  for (const auto& b : path)
    if (b.to_row > b.from_row) s = -s;
  return s;
}

InsertionOutcome rsk_insert(const SemiStandardTableau& t, int i) {
  require_letter(i);
  Rows rows = t.rows();
  std::vector<BumpRecord> path;
  int cur = i;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    settle(path, static_cast<int>(r) + 1);
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      Box b{static_cast<int>(r) + 1, static_cast<int>(row.size())};
      const int sign = bumping_sign(path);
      return {SemiStandardTableau::trusted(std::move(rows)), b, std::move(path), sign};
    }
    std::swap(cur, *it);
    path.push_back({cur, static_cast<int>(r) + 1, 0});
  }
}

InsertionOutcome dual_rsk_insert(const SemiStandardTableau& t, int i) {
  require_letter(i);
  Rows rows = t.rows();
  std::vector<BumpRecord> path;
  int cur = i;
  for (std::size_t c = 0;; ++c) {
    std::size_t r = 0;
    while (r < rows.size() && c < rows[r].size() && rows[r][c] < cur) ++r;
    settle(path, static_cast<int>(r) + 1);
    if (r == rows.size() || c >= rows[r].size()) {
      if (r == rows.size()) rows.emplace_back();
      rows[r].push_back(cur);
      Box b{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      const int sign = bumping_sign(path);
      return {SemiStandardTableau::trusted(std::move(rows)), b, std::move(path), sign};
    }
    std::swap(cur, rows[r][c]);
    path.push_back({cur, static_cast<int>(r) + 1, 0});
  }
}

namespace {

template <class Insert>
RskPair insert_word(const std::vector<int>& word, Insert&& insert) {
  SemiStandardTableau P;
  Rows q_rows;
  for (std::size_t k = 0; k < word.size(); ++k) {
    auto out = insert(P, word[k]);
    P = std::move(out.result);
    if (out.new_box.row > static_cast<int>(q_rows.size())) q_rows.emplace_back();
    q_rows[out.new_box.row - 1].push_back(static_cast<int>(k) + 1);
  }
  return {std::move(P), StandardTableau::trusted(std::move(q_rows))};
}

}  // namespace

RskPair rsk_word(const std::vector<int>& word) { return insert_word(word, rsk_insert); }

RskPair dual_rsk_word(const std::vector<int>& word) { return insert_word(word, dual_rsk_insert); }

std::vector<int> rsk_inverse(const RskPair& pair) {
  if (pair.P.shape() != pair.Q.shape())
    throw std::invalid_argument("P and Q must have the same shape");
  if (!pair.Q.is_standard()) throw std::invalid_argument("Q must be standard");
  Rows rows = pair.P.rows();
  const int n = pair.Q.size();
  std::vector<int> word(n);
  for (int k = n; k >= 1; --k) {
    const Box b = pair.Q.box_of(k);
    auto& row = rows[b.row - 1];
    if (static_cast<int>(row.size()) != b.col)
      throw std::invalid_argument("recording tableau is inconsistent with P");
    int x = row.back();
    row.pop_back();
    if (row.empty()) rows.pop_back();
    for (int r = b.row - 2; r >= 0; --r) {
      auto& up = rows[r];
      auto it = std::lower_bound(up.begin(), up.end(), x);
      if (it == up.begin()) throw std::invalid_argument("P is not reachable by row insertion");
      --it;
      std::swap(x, *it);
    }
    word[k - 1] = x;
  }
  return word;
}

// ---------------------------------------------------------------- q-insertion

namespace {

struct QSearch {
  Rows rows;
  int hole_row = 0;  // 1-based; the hole sits at the end of this row
  std::vector<BumpRecord> path;
  std::vector<InsertionOutcome>* out = nullptr;
  std::set<std::pair<Rows, int>>* seen = nullptr;

  int hole_col() const {
    return hole_row <= static_cast<int>(rows.size()) ? static_cast<int>(rows[hole_row - 1].size()) + 1 : 1;
  }

  // c may sit at (r, col) given the cells above and to the left.
  bool fits(int r, int col, int c) const {
    if (col > 1 && rows[r - 1][col - 2] > c) return false;
    if (r > 1 && static_cast<int>(rows[r - 2].size()) >= col && rows[r - 2][col - 1] >= c) return false;
    return true;
  }

  void run(int c) {
    // Fill the hole.
    {
      Rows filled = rows;
      if (hole_row > static_cast<int>(filled.size())) filled.emplace_back();
      filled[hole_row - 1].push_back(c);
      auto path_done = path;
      settle(path_done, hole_row);
      Tableau check(filled);
      if (check.is_semistandard(std::max(1, check.max_entry())) &&
          seen->insert({filled, hole_row}).second) {
        const int sign = bumping_sign(path_done);
        out->push_back({SemiStandardTableau::trusted(std::move(filled)), Box{hole_row, hole_col()},
                        std::move(path_done), sign});
      }
    }
    // Bump the leftmost j > c of some row.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::set<int> tried;
      for (std::size_t col = 0; col < rows[r].size(); ++col) {
        const int j = rows[r][col];
        if (j <= c || !tried.insert(j).second) continue;
        const int rr = static_cast<int>(r) + 1;
        const int cc = static_cast<int>(col) + 1;
        if (!fits(rr, cc, c)) continue;
        QSearch next = *this;
        next.rows[r][col] = c;
        settle(next.path, rr);
        next.path.push_back({j, rr, 0});
        next.run(j);
      }
    }
  }
};

}  // namespace

std::vector<InsertionOutcome> q_insert(const SemiStandardTableau& t, int i) {
  require_letter(i);
  std::vector<InsertionOutcome> out;
  std::set<std::pair<Rows, int>> seen;
  for (int r : t.shape().addable_rows()) {
    QSearch s;
    s.rows = t.rows();
    s.hole_row = r;
    s.out = &out;
    s.seen = &seen;
    s.run(i);
  }
  return out;
}

std::vector<QInsertionRecord> q_insert_word(const std::vector<int>& word) {
  std::vector<QInsertionRecord> current{{SemiStandardTableau(), StandardTableau(), 1}};
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<QInsertionRecord> next;
    std::set<std::pair<SemiStandardTableau, StandardTableau>> seen;
    for (const auto& rec : current) {
      for (auto& o : q_insert(rec.P, word[k])) {
        auto Q = rec.Q.with_entry(o.new_box.row, static_cast<int>(k) + 1);
        if (!seen.insert({o.result, Q}).second) continue;
        next.push_back({std::move(o.result), std::move(Q), rec.sign * o.sign});
      }
    }
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------- words

std::size_t word_index(const std::vector<int>& word, int d) {
  std::size_t idx = 0;
  for (int letter : word) {
    if (letter < 1 || letter > d) throw std::invalid_argument("letter out of range");
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(letter - 1);
  }
  return idx;
}

std::vector<int> word_at(std::size_t index, int n, int d) {
  std::vector<int> w(n);
  for (int k = n - 1; k >= 0; --k) {
    w[k] = static_cast<int>(index % static_cast<std::size_t>(d)) + 1;
    index /= static_cast<std::size_t>(d);
  }
  return w;
}

std::vector<std::vector<int>> all_words(int n, int d) {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(d);
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) out.push_back(word_at(k, n, d));
  return out;
}

}  // namespace qschur
