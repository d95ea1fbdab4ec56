#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdsynth/matrix.hpp"

namespace tdsynth {

/// n x n bit matrix of entry residues mod 2.
struct BinaryPattern {
  int n = 0;
  std::vector<uint8_t> bits;  // row-major, values 0/1

  uint8_t at(int i, int j) const { return bits[size_t(i) * n + j]; }
  uint8_t& at(int i, int j) { return bits[size_t(i) * n + j]; }
  bool operator==(const BinaryPattern& o) const {
    return n == o.n && bits == o.bits;
  }

  BinaryPattern transposed() const;
  int row_weight(int i) const;
  int col_weight(int j) const;
};

/// Residues mod 2 of the integer part of U at its least scaled exponent.
BinaryPattern binary_pattern(const ScaledDyadicMatrix& u);

/// A bijection on 0..n-1. `image[i]` is the source index placed at
/// position i, so acting on rows gives new_row[i] = old_row[image[i]].
struct Permutation {
  int n = 0;
  std::vector<int> image;

  static Permutation identity(int n);
  bool is_identity() const;
  /// Swaps (a, b) in application order whose composition realizes this
  /// permutation as a product of row (or column) exchanges.
  std::vector<std::pair<int, int>> transpositions() const;
};

/// If the rows of B partition into identical pairs, returns the
/// permutation placing each pair at positions (2i, 2i+1): rows are grouped
/// by bit-string value, groups in ascending order, members in ascending
/// original index. Otherwise nullopt.
std::optional<Permutation> find_row_pairing(const BinaryPattern& b);

/// find_row_pairing of the transpose; the returned permutation acts on
/// columns.
std::optional<Permutation> is_column_paired(const BinaryPattern& b);

/// Classification against the canonical tables, with witness:
/// observed(i, j) = table[row_perm[i]][col_perm[j]], where `table` is the
/// stored pattern, transposed first when `transposed` is set.
struct PatternId {
  std::string label;  // "A".."N" at n=8, "B0".."B2" at n=4
  bool transposed = false;
  Permutation row_perm;
  Permutation col_perm;
};

/// Canonical pattern tables: labels A..N for n=8, B0..B2 for n=4.
const std::vector<std::pair<std::string, BinaryPattern>>& pattern_tables(int n);

/// Matches B against the tables up to row/column permutation and (at n=8)
/// transpose. Throws DomainError on no match; never guesses.
PatternId classify_pattern(const BinaryPattern& b);

/// Rebuilds the bits described by a witness; used to validate witnesses.
BinaryPattern reconstruct_pattern(const PatternId& id);

}  // namespace tdsynth
