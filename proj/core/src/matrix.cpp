#include "tdsynth/matrix.hpp"

#include <algorithm>
#include <utility>

namespace tdsynth {

namespace {

bool all_even(const std::vector<Int>& e) {
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return is_even(x); });
}

bool all_zero(const std::vector<Int>& e) {
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
}

// Shared canonicalization: divide by 2 / drop k by 2 while possible. The
// all-zero value is represented with k = 0 by convention.
void normalize_entries(std::vector<Int>& e, unsigned& k) {
  if (all_zero(e)) {
    k = 0;
    return;
  }
  while (k >= 2 && all_even(e)) {
    for (Int& x : e) x /= 2;
    k -= 2;
  }
}

}  // namespace

ScaledDyadicMatrix ScaledDyadicMatrix::identity(int n) {
  if (n <= 0) throw DimensionError("identity: dimension must be positive");
  ScaledDyadicMatrix m;
  m.n_ = n;
  m.k_ = 0;
  m.e_.assign(size_t(n) * n, Int(0));
  for (int i = 0; i < n; ++i) m.e_[size_t(i) * n + i] = 1;
  return m;
}

ScaledDyadicMatrix ScaledDyadicMatrix::from_entries(int n, unsigned raw_k,
                                                    std::vector<Int> entries) {
  if (n <= 0) throw DimensionError("from_entries: dimension must be positive");
  if (entries.size() != size_t(n) * size_t(n))
    throw DimensionError("from_entries: entry count does not match dimension");
  ScaledDyadicMatrix m;
  m.n_ = n;
  m.k_ = raw_k;
  m.e_ = std::move(entries);
  m.normalize();
  return m;
}

void ScaledDyadicMatrix::normalize() { normalize_entries(e_, k_); }

void ScaledDyadicMatrix::check_index(int i) const {
  if (i < 0 || i >= n_) throw DimensionError("row/column index out of range");
}

bool ScaledDyadicMatrix::is_identity() const {
  if (k_ != 0) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return n_ > 0;
}

void ScaledDyadicMatrix::negate_row(int a) {
  check_index(a);
  for (int j = 0; j < n_; ++j) e_[size_t(a) * n_ + j] = -e_[size_t(a) * n_ + j];
}

void ScaledDyadicMatrix::swap_rows(int a, int b) {
  check_index(a);
  check_index(b);
  for (int j = 0; j < n_; ++j)
    std::swap(e_[size_t(a) * n_ + j], e_[size_t(b) * n_ + j]);
}

void ScaledDyadicMatrix::k_rows(int a, int b, int c, int d) {
  check_index(a);
  check_index(b);
  check_index(c);
  check_index(d);
  for (int i = 0; i < n_; ++i) {
    if (i == a || i == b || i == c || i == d) continue;
    for (int j = 0; j < n_; ++j) e_[size_t(i) * n_ + j] *= 2;
  }
  for (int j = 0; j < n_; ++j) {
    Int& xa = e_[size_t(a) * n_ + j];
    Int& xb = e_[size_t(b) * n_ + j];
    Int& xc = e_[size_t(c) * n_ + j];
    Int& xd = e_[size_t(d) * n_ + j];
    Int r0 = xa + xb + xc + xd;
    Int r1 = xa - xb + xc - xd;
    Int r2 = xa + xb - xc - xd;
    Int r3 = xa - xb - xc + xd;
    xa = std::move(r0);
    xb = std::move(r1);
    xc = std::move(r2);
    xd = std::move(r3);
  }
  k_ += 2;
  normalize();
}

void ScaledDyadicMatrix::ih_rows() {
  if (n_ % 2 != 0) throw DomainError("ih_rows requires even dimension");
  for (int a = 0; a + 1 < n_; a += 2)
    for (int j = 0; j < n_; ++j) {
      Int& x = e_[size_t(a) * n_ + j];
      Int& y = e_[size_t(a + 1) * n_ + j];
      Int s = x + y;
      y = x - y;
      x = std::move(s);
    }
  k_ += 1;
  normalize();
}

void ScaledDyadicMatrix::negate_col(int a) {
  check_index(a);
  for (int i = 0; i < n_; ++i) e_[size_t(i) * n_ + a] = -e_[size_t(i) * n_ + a];
}

void ScaledDyadicMatrix::swap_cols(int a, int b) {
  check_index(a);
  check_index(b);
  for (int i = 0; i < n_; ++i)
    std::swap(e_[size_t(i) * n_ + a], e_[size_t(i) * n_ + b]);
}

void ScaledDyadicMatrix::k_cols(int a, int b, int c, int d) {
  check_index(a);
  check_index(b);
  check_index(c);
  check_index(d);
  for (int j = 0; j < n_; ++j) {
    if (j == a || j == b || j == c || j == d) continue;
    for (int i = 0; i < n_; ++i) e_[size_t(i) * n_ + j] *= 2;
  }
  for (int i = 0; i < n_; ++i) {
    Int& xa = e_[size_t(i) * n_ + a];
    Int& xb = e_[size_t(i) * n_ + b];
    Int& xc = e_[size_t(i) * n_ + c];
    Int& xd = e_[size_t(i) * n_ + d];
    Int r0 = xa + xb + xc + xd;
    Int r1 = xa - xb + xc - xd;
    Int r2 = xa + xb - xc - xd;
    Int r3 = xa - xb - xc + xd;
    xa = std::move(r0);
    xb = std::move(r1);
    xc = std::move(r2);
    xd = std::move(r3);
  }
  k_ += 2;
  normalize();
}

void ScaledDyadicMatrix::ih_cols() {
  if (n_ % 2 != 0) throw DomainError("ih_cols requires even dimension");
  for (int a = 0; a + 1 < n_; a += 2)
    for (int i = 0; i < n_; ++i) {
      Int& x = e_[size_t(i) * n_ + a];
      Int& y = e_[size_t(i) * n_ + a + 1];
      Int s = x + y;
      y = x - y;
      x = std::move(s);
    }
  k_ += 1;
  normalize();
}

DyadicVector DyadicVector::from_entries(unsigned raw_k,
                                        std::vector<Int> entries) {
  if (entries.empty()) throw DimensionError("from_entries: empty vector");
  DyadicVector v;
  v.k_ = raw_k;
  v.e_ = std::move(entries);
  v.normalize();
  return v;
}

DyadicVector DyadicVector::basis(int n, int j) {
  if (n <= 0 || j < 0 || j >= n) throw DimensionError("basis: index out of range");
  std::vector<Int> e(size_t(n), Int(0));
  e[size_t(j)] = 1;
  return from_entries(0, std::move(e));
}

void DyadicVector::normalize() { normalize_entries(e_, k_); }

bool DyadicVector::is_unit() const {
  Int s = 0;
  for (const Int& x : e_) s += x * x;
  return s == pow2(k_);
}

void DyadicVector::negate_entry(int a) { e_.at(size_t(a)) = -e_.at(size_t(a)); }

void DyadicVector::swap_entries(int a, int b) {
  std::swap(e_.at(size_t(a)), e_.at(size_t(b)));
}

void DyadicVector::k_entries(int a, int b, int c, int d) {
  for (int i = 0; i < dim(); ++i) {
    if (i == a || i == b || i == c || i == d) continue;
    e_[size_t(i)] *= 2;
  }
  Int& xa = e_.at(size_t(a));
  Int& xb = e_.at(size_t(b));
  Int& xc = e_.at(size_t(c));
  Int& xd = e_.at(size_t(d));
  Int r0 = xa + xb + xc + xd;
  Int r1 = xa - xb + xc - xd;
  Int r2 = xa + xb - xc - xd;
  Int r3 = xa - xb - xc + xd;
  xa = std::move(r0);
  xb = std::move(r1);
  xc = std::move(r2);
  xd = std::move(r3);
  k_ += 2;
  normalize();
}

void DyadicVector::ih_entries() {
  if (dim() % 2 != 0) throw DomainError("ih_entries requires even dimension");
  for (int a = 0; a + 1 < dim(); a += 2) {
    Int& x = e_[size_t(a)];
    Int& y = e_[size_t(a + 1)];
    Int s = x + y;
    y = x - y;
    x = std::move(s);
  }
  k_ += 1;
  normalize();
}

ScaledDyadicMatrix multiply(const ScaledDyadicMatrix& a,
                            const ScaledDyadicMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("multiply: dimension mismatch");
  const int n = a.dim();
  std::vector<Int> e(size_t(n) * n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const Int& ail = a.at(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < n; ++j) e[size_t(i) * n + j] += ail * b.at(l, j);
    }
  return ScaledDyadicMatrix::from_entries(n, a.exponent() + b.exponent(),
                                          std::move(e));
}

DyadicVector multiply(const ScaledDyadicMatrix& a, const DyadicVector& v) {
  if (a.dim() != v.dim())
    throw DimensionError("multiply: dimension mismatch");
  const int n = a.dim();
  std::vector<Int> e(size_t(n), Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[size_t(i)] += a.at(i, j) * v.at(j);
  return DyadicVector::from_entries(a.exponent() + v.exponent(), std::move(e));
}

ScaledDyadicMatrix transpose(const ScaledDyadicMatrix& u) {
  const int n = u.dim();
  std::vector<Int> e(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[size_t(j) * n + i] = u.at(i, j);
  return ScaledDyadicMatrix::from_entries(n, u.exponent(), std::move(e));
}

bool is_orthogonal(const ScaledDyadicMatrix& u) {
  // U^T U = I  <=>  M^T M = 2^k I at the integer level.
  const int n = u.dim();
  if (n == 0) return false;
  const Int scale = pow2(u.exponent());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Int s = 0;
      for (int l = 0; l < n; ++l) s += u.at(l, i) * u.at(l, j);
      if (s != (i == j ? scale : Int(0))) return false;
    }
  return true;
}

ScaledDyadicMatrix kron(const ScaledDyadicMatrix& a,
                        const ScaledDyadicMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  const int n = na * nb;
  std::vector<Int> e(size_t(n) * n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q)
          e[size_t(i * nb + p) * n + (j * nb + q)] = a.at(i, j) * b.at(p, q);
  return ScaledDyadicMatrix::from_entries(n, a.exponent() + b.exponent(),
                                          std::move(e));
}

DyadicVector column(const ScaledDyadicMatrix& u, int j) {
  const int n = u.dim();
  if (j < 0 || j >= n) throw DimensionError("column: index out of range");
  std::vector<Int> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[size_t(i)] = u.at(i, j);
  return DyadicVector::from_entries(u.exponent(), std::move(e));
}

}  // namespace tdsynth
