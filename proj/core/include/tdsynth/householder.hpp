#pragma once

#include <vector>

#include "tdsynth/generator.hpp"

namespace tdsynth {

/// U together with its 2n-dimensional embedding
/// U' = |+><-| (x) U + |-><+| (x) U^T, which is orthogonal, symmetric and
/// squares to the identity. Basis order: the ancilla is the most
/// significant index (top tensor factor).
struct EmbeddedOperator {
  ScaledDyadicMatrix source;
  ScaledDyadicMatrix embedded;
};

/// A reflection axis together with a word realizing I - 2|axis><axis|.
struct Reflection {
  DyadicVector axis;
  GeneratorWord word;
};

/// Symbolic ancilla wrapper C = (H (x) I) D (HX (x) I). The pre/post gates
/// act on the ancilla qubit only; D is the synthesized word for U'.
struct WrapperSpec {
  bool available = false;  // false for the integral gate set (see docs)
  std::vector<std::string> pre;   // e.g. {"X@anc", "H@anc"}, applied first
  std::vector<std::string> post;  // e.g. {"H@anc"}
  std::string ancilla = "msb";
};

/// Requires U orthogonal with even scaled exponent. The embedding of a
/// matrix with odd exponent has reflection axes outside the ring of
/// integer-over-sqrt(2)^k vectors, so it is rejected.
EmbeddedOperator embed(const ScaledDyadicMatrix& u);

/// The n axes |w_j^-> = (|->|j> - |+>|u_j>)/sqrt(2) in canonical form;
/// pairwise orthogonal unit vectors, the -1 eigenvectors of U'.
std::vector<DyadicVector> reflection_vectors(const ScaledDyadicMatrix& u);

/// Word G' ++ [(-1)_0] ++ reverse(G') where G' reduces the axis to |0>
/// (with an I(x)H pre-step when the axis exponent is odd, which requires
/// even dimension). Evaluates exactly to I - 2|axis><axis|.
Reflection synthesize_reflection(const DyadicVector& axis);

/// Concatenation of the n reflection words; evaluates exactly to U'.
/// Ring selects the wrapper: Scaled yields the single-ancilla circuit
/// assembly, Integral marks it unavailable.
std::pair<GeneratorWord, WrapperSpec> synthesize_householder(
    const ScaledDyadicMatrix& u, Ring ring);

}  // namespace tdsynth
