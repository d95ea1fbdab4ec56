#include "tdsynth/householder.hpp"

#include <algorithm>
#include <utility>

#include "tdsynth/local.hpp"

namespace tdsynth {

EmbeddedOperator embed(const ScaledDyadicMatrix& u) {
  if (!is_orthogonal(u)) {
    throw DomainError("embed: matrix is not orthogonal");
  }
  if (u.exponent() % 2 != 0) {
    throw DomainError(
        "embed: odd scaled exponent is not supported; the reflection axes "
        "of the embedding are not representable over sqrt(2)^k");
  }
  const int n = u.dim();
  std::vector<Int> entries(size_t(4) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Int& m = u.at(i, j);
      const Int& mt = u.at(j, i);
      entries[size_t(i) * 2 * n + j] = m + mt;        // U + U^T
      entries[size_t(i) * 2 * n + (n + j)] = mt - m;  // -U + U^T
      entries[size_t(n + i) * 2 * n + j] = m - mt;    // U - U^T
      entries[size_t(n + i) * 2 * n + (n + j)] = -(m + mt);
    }
  }
  EmbeddedOperator out{
      u, ScaledDyadicMatrix::from_entries(2 * n, u.exponent() + 2,
                                          std::move(entries))};
  if (transpose(out.embedded) != out.embedded) {
    throw InternalError("embed: embedding is not symmetric");
  }
  if (multiply(out.embedded, out.embedded) !=
      ScaledDyadicMatrix::identity(2 * n)) {
    throw InternalError("embed: embedding is not an involution");
  }
  return out;
}

std::vector<DyadicVector> reflection_vectors(const ScaledDyadicMatrix& u) {
  if (!is_orthogonal(u)) {
    throw DomainError("reflection_vectors: matrix is not orthogonal");
  }
  if (u.exponent() % 2 != 0) {
    throw DomainError("reflection_vectors: odd scaled exponent unsupported");
  }
  const int n = u.dim();
  const Int root = pow2(u.exponent() / 2);  // 2^{k/2} = sqrt(2)^k
  std::vector<DyadicVector> axes;
  axes.reserve(size_t(n));
  for (int j = 0; j < n; ++j) {
    std::vector<Int> entries(size_t(2) * n);
    for (int i = 0; i < n; ++i) {
      const Int delta = (i == j) ? root : Int(0);
      entries[size_t(i)] = delta - u.at(i, j);
      entries[size_t(n + i)] = -delta - u.at(i, j);
    }
    DyadicVector axis =
        DyadicVector::from_entries(u.exponent() + 2, std::move(entries));
    if (!axis.is_unit()) {
      throw InternalError("reflection_vectors: axis is not a unit vector");
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

Reflection synthesize_reflection(const DyadicVector& axis) {
  if (!axis.is_unit()) {
    throw DomainError("synthesize_reflection: axis is not a unit vector");
  }
  const int n = axis.dim();
  GeneratorWord word(n);
  DyadicVector v = axis;
  const bool odd_exponent = v.exponent() % 2 != 0;
  if (odd_exponent) {
    if (n % 2 != 0) {
      throw DomainError(
          "synthesize_reflection: odd axis exponent requires even dimension");
    }
    word.push(Generator::ih());
    v.ih_entries();
  }
  GeneratorWord reduce = reduce_column(v, 0);
  for (const Generator& g : reduce.items) word.push(g);
  word.push(Generator::neg_one(0));
  for (auto it = reduce.items.rbegin(); it != reduce.items.rend(); ++it) {
    word.push(*it);
  }
  if (odd_exponent) word.push(Generator::ih());
  return Reflection{axis, std::move(word)};
}

std::pair<GeneratorWord, WrapperSpec> synthesize_householder(
    const ScaledDyadicMatrix& u, Ring ring) {
  EmbeddedOperator emb = embed(u);
  GeneratorWord word(2 * u.dim());
  for (const DyadicVector& axis : reflection_vectors(u)) {
    Reflection r = synthesize_reflection(axis);
    for (const Generator& g : r.word.items) word.push(g);
  }
  if (evaluate_word(word) != emb.embedded) {
    throw InternalError("synthesize_householder: word mismatch");
  }
  WrapperSpec wrapper;
  if (ring == Ring::Scaled) {
    wrapper.available = true;
    wrapper.pre = {"X@anc", "H@anc"};
    wrapper.post = {"H@anc"};
  }
  return {std::move(word), wrapper};
}

}  // namespace tdsynth
