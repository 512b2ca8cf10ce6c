#pragma once

#include <cstddef>
#include <vector>

#include "qschur/tableaux.hpp"

namespace qschur {

/// One displaced letter: it left from_row and settled in to_row.
struct BumpRecord {
  int letter = 0;
  int from_row = 0;
  int to_row = 0;
  friend bool operator==(const BumpRecord&, const BumpRecord&) = default;
};

struct InsertionOutcome {
  SemiStandardTableau result;
  Box new_box;
  std::vector<BumpRecord> path;
  int sign = 1;
};

/// -1 per record whose letter moved to a lower row.
int bumping_sign(const std::vector<BumpRecord>& path);

struct RskPair {
  SemiStandardTableau P;
  StandardTableau Q;
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Row insertion: i bumps the leftmost entry > i of each row in turn.
InsertionOutcome rsk_insert(const SemiStandardTableau& t, int i);
/// Column insertion: i bumps the topmost entry >= i of each column in turn.
InsertionOutcome dual_rsk_insert(const SemiStandardTableau& t, int i);

/// Letters inserted left to right; Q records the order boxes were added.
RskPair rsk_word(const std::vector<int>& word);
/// Inverse of rsk_word. Throws std::invalid_argument on a shape mismatch.
std::vector<int> rsk_inverse(const RskPair& pair);
/// Same as rsk_word with column insertion.
RskPair dual_rsk_word(const std::vector<int>& word);

/// Every outcome of quantum insertion, one per (result, new box), in the
/// order the search finds them (new-box row ascending).
std::vector<InsertionOutcome> q_insert(const SemiStandardTableau& t, int i);

struct QInsertionRecord {
  SemiStandardTableau P;
  StandardTableau Q;
  int sign = 1;
};

/// Quantum insertion of a whole word (left to right), distinguishing
/// outcomes by their recording tableau.
std::vector<QInsertionRecord> q_insert_word(const std::vector<int>& word);

/// 0-based big-endian index of a word over {1..d}.
std::size_t word_index(const std::vector<int>& word, int d);
std::vector<int> word_at(std::size_t index, int n, int d);
/// All d^n words in index order.
std::vector<std::vector<int>> all_words(int n, int d);

}  // namespace qschur
