#pragma once

#include <array>

#include "tdsynth/generator.hpp"

namespace tdsynth {

/// One quadruple-reduction step: four strictly increasing positions whose
/// entries are odd, and the sign flips making every entry congruent to
/// 1 mod 4, after which the four-level K combination leaves all four even.
struct QuadrupleStep {
  std::array<int, 4> indices;
  std::array<uint8_t, 4> tau;
};

/// Applies the step to v in place and returns it together with the
/// generators applied (up to four (-1), then one K), in application order.
/// Every selected entry must be odd.
QuadrupleStep reduce_quadruple(DyadicVector& v, const std::array<int, 4>& idx,
                               GeneratorWord& applied);

/// Word w with (w applied to u) = |target_j>. Requires u unit with even
/// scaled exponent. While the base-2 lde is positive, all odd entries are
/// grouped into ascending quadruples and reduced; at lde 0 an optional
/// (-1) and an optional two-level X land on +|target_j>.
GeneratorWord reduce_column(const DyadicVector& u, int target_j);

/// Column-by-column synthesis: evaluate_word(result) = u exactly.
/// Ring::Integral requires an even scaled exponent. Ring::Scaled with odd
/// exponent requires even n; the reduction then runs on (I(x)H)U and the
/// generator is re-attached to the output word.
GeneratorWord synthesize_local(const ScaledDyadicMatrix& u, Ring ring);

}  // namespace tdsynth
