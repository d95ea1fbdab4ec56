#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tdsynth/matrix.hpp"

namespace tdsynth {

enum class GenKind : uint8_t { NegOne, TwoLevelX, FourLevelK, IH };

/// One symbolic generator: (-1)_[a], X_[a,b], K_[a,b,c,d] or I (x) H.
/// Level indices are strictly increasing; IH carries none and is only
/// valid at even dimension. Every generator is self-inverse as a matrix.
struct Generator {
  GenKind kind;
  std::array<int, 4> idx{0, 0, 0, 0};  // only the first 0/1/2/4 are used

  static Generator neg_one(int a) { return {GenKind::NegOne, {a, 0, 0, 0}}; }
  static Generator two_level_x(int a, int b) {
    return {GenKind::TwoLevelX, {a, b, 0, 0}};
  }
  static Generator four_level_k(int a, int b, int c, int d) {
    return {GenKind::FourLevelK, {a, b, c, d}};
  }
  static Generator ih() { return {GenKind::IH, {0, 0, 0, 0}}; }

  bool operator==(const Generator& o) const {
    return kind == o.kind && idx == o.idx;
  }

  /// Throws if the indices are out of range or unordered for dimension n,
  /// or if this is IH at odd n.
  void validate(int n) const;

  std::string to_string() const;  // M[a] / X[a,b] / K[a,b,c,d] / IH
};

/// An ordered sequence of generators in application order: item 0 is
/// applied first to a column vector, so the word [G1,...,Gq] denotes the
/// matrix product Gq ... G2 G1.
struct GeneratorWord {
  int n = 0;
  std::vector<Generator> items;

  GeneratorWord() = default;
  explicit GeneratorWord(int dim) : n(dim) {}

  size_t length() const { return items.size(); }
  size_t ih_count() const;
  void push(const Generator& g) { items.push_back(g); }
  void append(const GeneratorWord& w);
  bool operator==(const GeneratorWord& o) const {
    return n == o.n && items == o.items;
  }
};

ScaledDyadicMatrix generator_matrix(const Generator& g, int n);

/// Left action as O(n) row updates; equals
/// multiply(generator_matrix(g, n), u).
ScaledDyadicMatrix apply_left(const Generator& g, const ScaledDyadicMatrix& u);
void apply_left_in_place(const Generator& g, ScaledDyadicMatrix& u);
void apply_left_in_place(const Generator& g, DyadicVector& v);

/// Right action as column updates; equals
/// multiply(u, generator_matrix(g, n)).
void apply_right_in_place(const Generator& g, ScaledDyadicMatrix& u);

ScaledDyadicMatrix evaluate_word(const GeneratorWord& w);

/// Reversal; evaluates to the inverse since every generator is self-inverse.
GeneratorWord word_inverse(const GeneratorWord& w);

enum class Ring { Integral, Scaled };

/// Deterministic pseudo-random words. For Ring::Integral no IH is drawn;
/// for Ring::Scaled at even n, IH is drawn with probability 1/4. Returns
/// the word and its evaluation.
std::pair<GeneratorWord, ScaledDyadicMatrix> random_element(
    int n, size_t word_length, Ring ring, uint64_t seed);

/// Random matrix whose least scaled denominator exponent is exactly
/// k_target, grown by appending random generators. For Ring::Integral the
/// target must be even. Deterministic under seed.
std::pair<GeneratorWord, ScaledDyadicMatrix> random_matrix_with_lde(
    int n, unsigned k_target, Ring ring, uint64_t seed);

// Word text format: header line "dim <n>", then one generator per line.
std::string format_word(const GeneratorWord& w);
GeneratorWord parse_word(const std::string& text);

/// Parses a single generator token (M[a] / X[a,b] / K[a,b,c,d] / IH).
/// Throws ParseError; does not range-check against a dimension.
Generator parse_generator(const std::string& token);

}  // namespace tdsynth
