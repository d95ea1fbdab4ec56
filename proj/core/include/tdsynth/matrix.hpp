#pragma once

#include <cstddef>
#include <vector>

#include "tdsynth/types.hpp"

namespace tdsynth {

/// An n x n matrix of the form M / sqrt(2)^k with integer entries M,
/// kept in canonical form: k is never reducible, i.e. it is not the case
/// that k >= 2 and every entry is even. k may be odd with all entries even
/// (2m / sqrt(2) cannot be rewritten with a smaller exponent).
///
/// Values are immutable from the outside except through the row/column
/// operations below, each of which renormalizes, so the canonical-form
/// invariant holds at all times.
class ScaledDyadicMatrix {
 public:
  ScaledDyadicMatrix() = default;

  static ScaledDyadicMatrix identity(int n);

  /// Builds M / sqrt(2)^raw_k and normalizes. `entries` is row-major and
  /// must have n*n elements.
  static ScaledDyadicMatrix from_entries(int n, unsigned raw_k,
                                         std::vector<Int> entries);

  int dim() const { return n_; }

  /// The least scaled (base-sqrt(2)) denominator exponent.
  unsigned exponent() const { return k_; }

  /// Base-2 least denominator exponent, ceil(k/2).
  unsigned lde2() const { return (k_ + 1) / 2; }

  const Int& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }

  bool operator==(const ScaledDyadicMatrix& o) const {
    return n_ == o.n_ && k_ == o.k_ && e_ == o.e_;
  }
  bool operator!=(const ScaledDyadicMatrix& o) const { return !(*this == o); }

  bool is_identity() const;

  // In-place row operations used to apply generators. Each maintains the
  // canonical form. Operations that raise the exponent scale the
  // unaffected rows accordingly, so the value stays exact.
  void negate_row(int a);
  void swap_rows(int a, int b);
  /// Four-row +/- combination of rows a<b<c<d with the sign layout of
  /// H (x) H; k <- k + 2, remaining rows scaled by 2.
  void k_rows(int a, int b, int c, int d);
  /// Left multiplication by I (x) H: every row pair (2i, 2i+1) becomes
  /// (sum, difference); k <- k + 1. Requires even dimension.
  void ih_rows();

  // Column counterparts (right multiplication).
  void negate_col(int a);
  void swap_cols(int a, int b);
  void k_cols(int a, int b, int c, int d);
  void ih_cols();

 private:
  void normalize();
  void check_index(int i) const;

  int n_ = 0;
  unsigned k_ = 0;
  std::vector<Int> e_;
};

/// An n-vector v / sqrt(2)^k in the same canonical form.
class DyadicVector {
 public:
  DyadicVector() = default;

  static DyadicVector from_entries(unsigned raw_k, std::vector<Int> entries);
  static DyadicVector basis(int n, int j);

  int dim() const { return int(e_.size()); }
  unsigned exponent() const { return k_; }
  unsigned lde2() const { return (k_ + 1) / 2; }
  const Int& at(int i) const { return e_[size_t(i)]; }

  bool operator==(const DyadicVector& o) const {
    return k_ == o.k_ && e_ == o.e_;
  }
  bool operator!=(const DyadicVector& o) const { return !(*this == o); }

  /// True iff sum of squared entries equals 2^k.
  bool is_unit() const;

  void negate_entry(int a);
  void swap_entries(int a, int b);
  void k_entries(int a, int b, int c, int d);
  void ih_entries();

 private:
  void normalize();

  unsigned k_ = 0;
  std::vector<Int> e_;
};

ScaledDyadicMatrix multiply(const ScaledDyadicMatrix& a,
                            const ScaledDyadicMatrix& b);
DyadicVector multiply(const ScaledDyadicMatrix& a, const DyadicVector& v);
ScaledDyadicMatrix transpose(const ScaledDyadicMatrix& u);
bool is_orthogonal(const ScaledDyadicMatrix& u);

/// Kronecker product; exponents add.
ScaledDyadicMatrix kron(const ScaledDyadicMatrix& a,
                        const ScaledDyadicMatrix& b);

/// Column j of u as a canonical vector.
DyadicVector column(const ScaledDyadicMatrix& u, int j);

}  // namespace tdsynth
