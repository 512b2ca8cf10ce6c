#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qschur {

/// Weakly decreasing list of positive parts. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order throws.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Length of 1-based row r; 0 past the last row.
  int row(int r) const;

  bool contains(const Partition& inner) const;
  /// Rows (1-based) where a box can be appended, including row length()+1.
  std::vector<int> addable_rows() const;
  /// This shape with one box appended to row r; r must be addable.
  Partition with_box(int r) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// 1-based box coordinates.
struct Box {
  int row = 1;
  int col = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Content col - row.
int residue(const Box& b);
/// res(b) - res(b2).
int axial_distance(const Box& b, const Box& b2);

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_shape, Partition inner_shape);
  std::vector<Box> boxes() const;
  /// Number of boxes of the skew shape in 1-based row r.
  int row_size(int r) const { return outer.row(r) - inner.row(r); }
};

/// λ covers μ: λ ⊇ μ with exactly one extra box.
bool covers(const Partition& mu, const Partition& lambda);
bool is_horizontal_strip(const SkewShape& s);

/// Axial distances a_ij between the last boxes of rows i < j of a shape.
/// Only rows holding at least one box carry an entry.
class AxialTable {
 public:
  explicit AxialTable(const SkewShape& shape);
  explicit AxialTable(const Partition& shape);

  /// a_ij for 1-based rows; throws std::out_of_range for rows without boxes.
  int at(int i, int j) const;
  /// Rows that carry an entry, ascending.
  std::vector<int> rows() const;
  /// True when no pair i < j exists.
  bool empty() const;

 private:
  std::vector<std::optional<int>> last_residue_;
};

/// Young tableau: rows of positive entries stored top to bottom.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  /// 1-based access.
  int at(int row, int col) const { return rows_.at(row - 1).at(col - 1); }
  int max_entry() const;
  /// Row-reading word (rows concatenated top to bottom).
  std::vector<int> reading_word() const;
  /// Box holding the given entry, searching rows top to bottom.
  std::optional<Box> find(int entry) const;

  bool is_semistandard(int d) const;
  bool is_standard() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 protected:
  std::vector<std::vector<int>> rows_;
};

/// Rows weakly increase, columns strictly increase.
class SemiStandardTableau : public Tableau {
 public:
  SemiStandardTableau() = default;
  /// Throws std::invalid_argument unless the rows form an SSYT over {1..d}.
  /// With d omitted the bound is the largest entry.
  static SemiStandardTableau from_rows(std::vector<std::vector<int>> rows,
                                       std::optional<int> d = std::nullopt);
  /// Skips validation; for algorithms that preserve semistandardness.
  static SemiStandardTableau trusted(std::vector<std::vector<int>> rows);

  /// Number of entries equal to i.
  int content(int i) const;
  /// Entries <= k only.
  SemiStandardTableau restrict_to(int k) const;
  /// sh(t^{(k)}) as a partition.
  Partition restricted_shape(int k) const;
  /// Length of 1-based row r of sh(t^{(k)}).
  int restricted_row(int r, int k) const;

 private:
  explicit SemiStandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {}
};

/// Entries 1..n each once, rows and columns strictly increasing.
class StandardTableau : public Tableau {
 public:
  StandardTableau() = default;
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  static StandardTableau trusted(std::vector<std::vector<int>> rows);

  /// The tableau with entries i and i+1 exchanged; nullopt when they share a
  /// row or a column.
  std::optional<StandardTableau> swap_adjacent(int i) const;
  /// Entries <= k (still standard).
  StandardTableau restrict_to(int k) const;
  /// This tableau with `entry` appended at the end of 1-based row r.
  StandardTableau with_entry(int r, int entry) const;
  /// Box containing entry i; throws if absent.
  Box box_of(int i) const;

 private:
  explicit StandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {}
};

SemiStandardTableau restrict(const SemiStandardTableau& t, int k);
int content_count(const SemiStandardTableau& t, int i);
/// λ^{(k)}(t) = sh(t^{(k)}) \ sh(t^{(k-1)}).
SkewShape letter_strip(const SemiStandardTableau& t, int k);

/// Partitions of n with at most max_length parts, descending lexicographic.
std::vector<Partition> partitions_of(int n, int max_length);
/// All partitions covering mu with at most max_length parts, ordered by the
/// row of the added box.
std::vector<Partition> covering_partitions(const Partition& mu, int max_length);

/// SSYT(λ, d) in lexicographic order of the row-reading word.
std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& lambda, int d);
/// SYT(λ) in lexicographic order of the row-reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

/// Shared read-only enumerations keyed by (λ, d). Thread-safe.
const std::vector<SemiStandardTableau>& cached_ssyt(const Partition& lambda, int d);
const std::vector<StandardTableau>& cached_syt(const Partition& lambda);

/// Position lookup over an ordered basis.
template <class T>
class BasisIndex {
 public:
  explicit BasisIndex(const std::vector<T>& basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) index_.emplace(basis[k], k);
  }
  std::optional<std::size_t> find(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const T& x) const { return index_.at(x); }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<T, std::size_t> index_;
};

// Text forms: tableaux as "1,1,2/2,3" (empty tableau is ""), partitions as
// "[3,2,1]" (empty is "[]"), words as "2,1,2".
std::string to_text(const Tableau& t);
std::string to_text(const Partition& p);
std::string word_to_text(const std::vector<int>& word);
std::vector<std::vector<int>> parse_tableau_rows(std::string_view text);
Partition parse_partition(std::string_view text);
std::vector<int> parse_word(std::string_view text);

}  // namespace qschur
