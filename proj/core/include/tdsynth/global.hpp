#pragma once

#include <string>
#include <vector>

#include "tdsynth/generator.hpp"
#include "tdsynth/pattern.hpp"

namespace tdsynth {

/// One commutation rule (IH)·lhs = rhs·(IH), or the cancellation rule
/// (IH)·(IH) = empty. Exact matrix identities at their dimension.
struct RewriteRule {
  std::string name;    // "cancel", "neg-even", "neg-odd", "x-even", "x-odd"
  Generator lhs;       // the generator to the right of IH
  std::vector<Generator> rhs;  // replacement, without the trailing IH
};

/// All rule instances valid at dimension n (n even). 16 instances at n=8.
std::vector<RewriteRule> rewrite_rules(int n);

/// Exhaustively checks every rule instance at dimension n as an exact
/// matrix identity. Returns the number of instances checked; throws
/// InternalError on any failure.
std::size_t check_rewrite_rules(int n);

enum class Side { Row, Column };

/// One lde-decreasing step. `fragment` lists, in applied order, the
/// transpositions realizing the pairing permutation followed by IH; for
/// Side::Row these act on the left of U, for Side::Column on the right.
struct PairedStep {
  Permutation perm;
  GeneratorWord fragment;
  ScaledDyadicMatrix next;
};

PairedStep reduce_paired_step(const ScaledDyadicMatrix& u, Side side);

/// One conjugation step: next = (IH)·R·U·C·(IH), where the row and
/// column permutations R and C align the pattern of U with its canonical
/// table so that every aligned 2x2 block has evenly many odd entries.
struct ConjugateStep {
  GeneratorWord left;   // applied to rows, in application order: swaps, IH
  GeneratorWord right;  // applied to columns, in application order
  ScaledDyadicMatrix next;
};

/// For n = 8 when the pattern is neither row- nor column-paired. The
/// result must be row- or column-paired and the exponent must not
/// increase; anything else is a hard error.
ConjugateStep conjugate_step(const ScaledDyadicMatrix& u);

struct StepRecord {
  std::string kind;  // "row-paired", "column-paired", "conjugate", "base"
  unsigned lde_before = 0;
  unsigned lde_after = 0;
};

struct GlobalResult {
  GeneratorWord word;
  std::vector<StepRecord> steps;
};

/// Pattern-driven synthesis for n in {2, 4, 8}: pairing steps (rows
/// preferred, then columns, then at n = 8 conjugation) strip the exponent
/// down to 0; the signed-permutation residue is synthesized column-wise.
/// evaluate_word(result.word) = u exactly.
GlobalResult synthesize_global_traced(const ScaledDyadicMatrix& u);
GeneratorWord synthesize_global(const ScaledDyadicMatrix& u);

/// Removes every IH from a word over dimension 8 whose IH items come in
/// pairs separated only by (-1) and two-level X items, by commuting the
/// left IH of each pair onto the right one and cancelling. The result
/// evaluates to the same matrix. Violated structure is a hard error.
GeneratorWord eliminate_ih_pairs(const GeneratorWord& w);

}  // namespace tdsynth
