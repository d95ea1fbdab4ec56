#include "tdsynth/local.hpp"

namespace tdsynth {

QuadrupleStep reduce_quadruple(DyadicVector& v, const std::array<int, 4>& idx,
                               GeneratorWord& applied) {
  QuadrupleStep step;
  step.indices = idx;
  for (int i = 0; i < 4; ++i) {
    if (i > 0 && idx[size_t(i)] <= idx[size_t(i - 1)])
      throw DomainError("reduce_quadruple: indices must be strictly increasing");
    const Int& x = v.at(idx[size_t(i)]);
    if (!is_odd(x)) throw DomainError("reduce_quadruple: entry is not odd");
    // flip entries congruent to 3 mod 4 so all four become 1 mod 4
    Int r = x % 4;  // in (-3..3], sign of x
    bool flip = (r == 3) || (r == -1);
    step.tau[size_t(i)] = flip ? 1 : 0;
    if (flip) {
      Generator g = Generator::neg_one(idx[size_t(i)]);
      apply_left_in_place(g, v);
      applied.push(g);
    }
  }
  Generator k = Generator::four_level_k(idx[0], idx[1], idx[2], idx[3]);
  apply_left_in_place(k, v);
  applied.push(k);
  return step;
}

GeneratorWord reduce_column(const DyadicVector& u, int target_j) {
  const int n = u.dim();
  if (target_j < 0 || target_j >= n)
    throw DimensionError("reduce_column: target index out of range");
  if (u.exponent() % 2 != 0)
    throw DomainError("reduce_column: scaled exponent must be even");
  if (!u.is_unit()) throw DomainError("reduce_column: input is not a unit vector");

  DyadicVector v = u;
  GeneratorWord w;
  w.n = n;
  while (v.exponent() > 0) {
    std::vector<int> odd;
    for (int i = 0; i < n; ++i)
      if (is_odd(v.at(i))) odd.push_back(i);
    if (odd.empty() || odd.size() % 4 != 0)
      throw InternalError("reduce_column: odd-entry count is not a positive multiple of 4");
    const unsigned before = v.exponent();
    for (size_t q = 0; q + 3 < odd.size(); q += 4)
      reduce_quadruple(v, {odd[q], odd[q + 1], odd[q + 2], odd[q + 3]}, w);
    if (v.exponent() >= before)
      throw InternalError("reduce_column: exponent did not decrease");
  }
  // base case: v = +-|j'> for some j'
  int hot = -1;
  for (int i = 0; i < n; ++i)
    if (v.at(i) != 0) hot = i;
  if (hot < 0) throw InternalError("reduce_column: zero vector at base case");
  if (v.at(hot) < 0) {
    Generator g = Generator::neg_one(hot);
    apply_left_in_place(g, v);
    w.push(g);
  }
  if (hot != target_j) {
    Generator g = Generator::two_level_x(std::min(hot, target_j),
                                         std::max(hot, target_j));
    apply_left_in_place(g, v);
    w.push(g);
  }
  return w;
}

GeneratorWord synthesize_local(const ScaledDyadicMatrix& u, Ring ring) {
  const int n = u.dim();
  if (!is_orthogonal(u))
    throw DomainError("synthesize_local: input is not orthogonal");
  const bool odd_exponent = u.exponent() % 2 != 0;
  if (odd_exponent) {
    if (ring == Ring::Integral)
      throw DomainError("synthesize_local: odd exponent in the integral ring");
    if (n % 2 != 0)
      throw DomainError("synthesize_local: odd exponent at odd dimension");
  }

  ScaledDyadicMatrix work = u;
  if (odd_exponent) apply_left_in_place(Generator::ih(), work);

  // Accumulate the generators applied on the left while reducing `work` to
  // the identity; the output word is their reversal.
  GeneratorWord applied;
  applied.n = n;
  for (int j = 0; j < n; ++j) {
    GeneratorWord col = reduce_column(column(work, j), j);
    for (const Generator& g : col.items) apply_left_in_place(g, work);
    applied.append(col);
  }
  if (!work.is_identity())
    throw InternalError("synthesize_local: residue is not the identity");

  GeneratorWord out = word_inverse(applied);
  if (odd_exponent) out.push(Generator::ih());
  return out;
}

}  // namespace tdsynth
