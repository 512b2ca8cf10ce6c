#include "qschur/tableaux.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int r) const {
  if (r < 1) throw std::out_of_range("partition rows are 1-based");
  return r <= length() ? parts_[r - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int r = 1; r <= inner.length(); ++r)
    if (inner.row(r) > row(r)) return false;
  return true;
}

std::vector<int> Partition::addable_rows() const {
  std::vector<int> out;
  for (int r = 1; r <= length() + 1; ++r)
    if (r == 1 || row(r - 1) > row(r)) out.push_back(r);
  return out;
}

Partition Partition::with_box(int r) const {
  if (r < 1 || r > length() + 1 || (r > 1 && row(r - 1) == row(r)))
    throw std::invalid_argument("row is not addable");
  std::vector<int> p = parts_;
  if (r == length() + 1)
    p.push_back(1);
  else
    ++p[r - 1];
  return Partition(std::move(p));
}

// ---------------------------------------------------------------- boxes & shapes

int residue(const Box& b) { return b.col - b.row; }

int axial_distance(const Box& b, const Box& b2) { return residue(b) - residue(b2); }

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner)) throw std::invalid_argument("skew shape needs inner within outer");
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) out.push_back({r, c});
  return out;
}

bool covers(const Partition& mu, const Partition& lambda) {
  return lambda.contains(mu) && lambda.size() == mu.size() + 1;
}

bool is_horizontal_strip(const SkewShape& s) {
  // Two boxes share a column iff some row's box range overlaps the row above,
  // i.e. outer(r+1) > inner(r).
  for (int r = 1; r < s.outer.length(); ++r)
    if (s.outer.row(r + 1) > s.inner.row(r)) return false;
  return true;
}

AxialTable::AxialTable(const SkewShape& shape) {
  last_residue_.resize(shape.outer.length());
  for (int r = 1; r <= shape.outer.length(); ++r)
    if (shape.row_size(r) > 0) last_residue_[r - 1] = residue({r, shape.outer.row(r)});
}

AxialTable::AxialTable(const Partition& shape) : AxialTable(SkewShape(shape, Partition())) {}

int AxialTable::at(int i, int j) const {
  auto get = [&](int r) {
    if (r < 1 || r > static_cast<int>(last_residue_.size()) || !last_residue_[r - 1])
      throw std::out_of_range("axial distance requested for an empty row");
    return *last_residue_[r - 1];
  };
  return get(i) - get(j);
}

std::vector<int> AxialTable::rows() const {
  std::vector<int> out;
  for (std::size_t r = 0; r < last_residue_.size(); ++r)
    if (last_residue_[r]) out.push_back(static_cast<int>(r) + 1);
  return out;
}

bool AxialTable::empty() const { return rows().size() < 2; }

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("tableau has an empty interior row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      throw std::invalid_argument("tableau rows must have weakly decreasing lengths");
    for (int v : rows_[r])
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
  }
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
  return Partition(std::move(p));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::optional<Box> Tableau::find(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  return std::nullopt;
}

bool Tableau::is_semistandard(int d) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > d) return false;
      if (c > 0 && rows_[r][c - 1] > v) return false;
      if (r > 0 && rows_[r - 1][c] >= v) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && rows_[r][c - 1] >= v) return false;
      if (r > 0 && rows_[r - 1][c] >= v) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- SSYT

SemiStandardTableau SemiStandardTableau::from_rows(std::vector<std::vector<int>> rows,
                                                   std::optional<int> d) {
  SemiStandardTableau t(std::move(rows));
  const int bound = d.value_or(std::max(1, t.max_entry()));
  if (!t.is_semistandard(bound))
    throw std::invalid_argument("not a semistandard tableau over {1.." + std::to_string(bound) +
                                "}: " + to_text(t));
  return t;
}

SemiStandardTableau SemiStandardTableau::trusted(std::vector<std::vector<int>> rows) {
  return SemiStandardTableau(std::move(rows));
}

int SemiStandardTableau::content(int i) const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(std::count(row.begin(), row.end(), i));
  return n;
}

SemiStandardTableau SemiStandardTableau::restrict_to(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows_) {
    std::vector<int> kept;
    for (int v : row)
      if (v <= k) kept.push_back(v);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return SemiStandardTableau(std::move(out));
}

Partition SemiStandardTableau::restricted_shape(int k) const {
  std::vector<int> p;
  for (std::size_t r = 0; r < rows_.size(); ++r) p.push_back(restricted_row(static_cast<int>(r) + 1, k));
  return Partition(std::move(p));
}

int SemiStandardTableau::restricted_row(int r, int k) const {
  if (r < 1) throw std::out_of_range("rows are 1-based");
  if (r > static_cast<int>(rows_.size())) return 0;
  const auto& row = rows_[r - 1];
  return static_cast<int>(std::upper_bound(row.begin(), row.end(), k) - row.begin());
}

// ---------------------------------------------------------------- SYT

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  StandardTableau t(std::move(rows));
  if (!t.is_standard()) throw std::invalid_argument("not a standard tableau: " + to_text(t));
  return t;
}

StandardTableau StandardTableau::trusted(std::vector<std::vector<int>> rows) {
  return StandardTableau(std::move(rows));
}

Box StandardTableau::box_of(int i) const {
  auto b = find(i);
  if (!b) throw std::out_of_range("entry " + std::to_string(i) + " not in tableau");
  return *b;
}

std::optional<StandardTableau> StandardTableau::swap_adjacent(int i) const {
  const Box a = box_of(i);
  const Box b = box_of(i + 1);
  if (a.row == b.row || a.col == b.col) return std::nullopt;
  auto rows = rows_;
  rows[a.row - 1][a.col - 1] = i + 1;
  rows[b.row - 1][b.col - 1] = i;
  return StandardTableau(std::move(rows));
}

StandardTableau StandardTableau::restrict_to(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows_) {
    std::vector<int> kept;
    for (int v : row)
      if (v <= k) kept.push_back(v);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return StandardTableau(std::move(out));
}

StandardTableau StandardTableau::with_entry(int r, int entry) const {
  auto rows = rows_;
  if (r == static_cast<int>(rows.size()) + 1) rows.emplace_back();
  rows.at(r - 1).push_back(entry);
  return StandardTableau(std::move(rows));
}

// ---------------------------------------------------------------- free functions

SemiStandardTableau restrict(const SemiStandardTableau& t, int k) { return t.restrict_to(k); }

int content_count(const SemiStandardTableau& t, int i) { return t.content(i); }

SkewShape letter_strip(const SemiStandardTableau& t, int k) {
  return SkewShape(t.restricted_shape(k), t.restricted_shape(k - 1));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_length) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, max_length, cur, out);
    cur.pop_back();
  }
}

template <class Accept>
void fill_cells(const Partition& lambda, int max_value, std::vector<std::vector<int>>& rows,
                int r, int c, Accept&& accept, bool strict_rows) {
  if (r > lambda.length()) {
    accept(rows);
    return;
  }
  const int next_r = c == lambda.row(r) ? r + 1 : r;
  const int next_c = c == lambda.row(r) ? 1 : c + 1;
  int lo = 1;
  if (c > 1) lo = std::max(lo, rows[r - 1][c - 2] + (strict_rows ? 1 : 0));
  if (r > 1) lo = std::max(lo, rows[r - 2][c - 1] + 1);
  for (int v = lo; v <= max_value; ++v) {
    rows[r - 1].push_back(v);
    fill_cells(lambda, max_value, rows, next_r, next_c, accept, strict_rows);
    rows[r - 1].pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_length, cur, out);
  return out;
}

std::vector<Partition> covering_partitions(const Partition& mu, int max_length) {
  std::vector<Partition> out;
  for (int r : mu.addable_rows())
    if (r <= max_length) out.push_back(mu.with_box(r));
  return out;
}

std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& lambda, int d) {
  if (lambda.length() > d)
    throw std::invalid_argument("SSYT(" + to_text(lambda) + ", " + std::to_string(d) +
                                ") is empty: more rows than letters");
  std::vector<SemiStandardTableau> out;
  std::vector<std::vector<int>> rows(lambda.length());
  if (lambda.empty()) {
    out.push_back(SemiStandardTableau::trusted({}));
    return out;
  }
  fill_cells(
      lambda, d, rows, 1, 1,
      [&](const std::vector<std::vector<int>>& r) { out.push_back(SemiStandardTableau::trusted(r)); },
      false);
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<StandardTableau> out;
  if (lambda.empty()) {
    out.push_back(StandardTableau::trusted({}));
    return out;
  }
  std::vector<std::vector<int>> rows(lambda.length());
  // Strict rows and columns over {1..n}; keep fillings that use every value.
  fill_cells(
      lambda, n, rows, 1, 1,
      [&](const std::vector<std::vector<int>>& r) {
        std::vector<bool> seen(n + 1, false);
        for (const auto& row : r)
          for (int v : row) {
            if (seen[v]) return;
            seen[v] = true;
          }
        out.push_back(StandardTableau::trusted(r));
      },
      true);
  return out;
}

const std::vector<SemiStandardTableau>& cached_ssyt(const Partition& lambda, int d) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, std::unique_ptr<std::vector<SemiStandardTableau>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{lambda, d}];
  if (!slot) slot = std::make_unique<std::vector<SemiStandardTableau>>(enumerate_ssyt(lambda, d));
  return *slot;
}

const std::vector<StandardTableau>& cached_syt(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<std::vector<StandardTableau>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[lambda];
  if (!slot) slot = std::make_unique<std::vector<StandardTableau>>(enumerate_syt(lambda));
  return *slot;
}

// ---------------------------------------------------------------- text forms

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(xs[k]);
  }
  return s;
}

std::vector<int> split_ints(std::string_view text) {
  std::vector<int> out;
  std::string item;
  auto flush = [&] {
    if (item.empty()) throw std::invalid_argument("empty integer field");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed integer '" + item + "'");
    out.push_back(v);
    item.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',')
      flush();
    else
      item += ch;
  }
  flush();
  return out;
}

}  // namespace

std::string to_text(const Tableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) s += '/';
    s += join_ints(t.rows()[r]);
  }
  return s;
}

std::string to_text(const Partition& p) { return "[" + join_ints(p.parts()) + "]"; }

std::string word_to_text(const std::vector<int>& word) { return join_ints(word); }

std::vector<std::vector<int>> parse_tableau_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (text.empty()) return rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    rows.push_back(split_ints(text.substr(start, slash == std::string_view::npos ? text.npos : slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return rows;
}

Partition parse_partition(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated partition");
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty()) return Partition();
  return Partition(split_ints(text));
}

std::vector<int> parse_word(std::string_view text) {
  if (text.empty()) return {};
  auto w = split_ints(text);
  for (int v : w)
    if (v < 1) throw std::invalid_argument("word letters must be >= 1");
  return w;
}

}  // namespace qschur
