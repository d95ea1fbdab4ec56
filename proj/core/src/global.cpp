#include "tdsynth/global.hpp"

#include <algorithm>

#include "tdsynth/local.hpp"

namespace tdsynth {

namespace {

// Commutation (IH)·g = rhs·(IH) for a single (-1) or adjacent X item.
std::vector<Generator> commute_rhs(const Generator& g, int n) {
  switch (g.kind) {
    case GenKind::NegOne: {
      const int a = g.idx[0];
      if (a % 2 == 0) {
        return {Generator::neg_one(a), Generator::two_level_x(a, a + 1),
                Generator::neg_one(a)};
      }
      return {Generator::two_level_x(a - 1, a)};
    }
    case GenKind::TwoLevelX: {
      const int a = g.idx[0];
      if (g.idx[1] != a + 1) {
        throw InternalError("commute_rhs: non-adjacent transposition");
      }
      if (a % 2 == 0) {
        return {Generator::neg_one(a + 1)};
      }
      if (a + 2 >= n) {
        throw InternalError("commute_rhs: K index out of range");
      }
      return {Generator::four_level_k(a - 1, a, a + 1, a + 2),
              Generator::two_level_x(a, a + 1)};
    }
    default:
      throw DomainError(
          "eliminate_ih_pairs: generator between an IH pair is neither "
          "(-1) nor a two-level X");
  }
}

// X_{a,b} as a product of adjacent transpositions:
// X_{a,b} = X_{b-1,b} · X_{a,b-1} · X_{b-1,b}, recursively.
void expand_adjacent(int a, int b, std::vector<Generator>& out) {
  if (b == a + 1) {
    out.push_back(Generator::two_level_x(a, b));
    return;
  }
  out.push_back(Generator::two_level_x(b - 1, b));
  expand_adjacent(a, b - 1, out);
  out.push_back(Generator::two_level_x(b - 1, b));
}

}  // namespace

std::vector<RewriteRule> rewrite_rules(int n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("rewrite_rules: dimension must be even");
  }
  std::vector<RewriteRule> rules;
  rules.push_back({"cancel", Generator::ih(), {}});
  for (int a = 0; a < n; ++a) {
    rules.push_back({a % 2 == 0 ? "neg-even" : "neg-odd",
                     Generator::neg_one(a),
                     commute_rhs(Generator::neg_one(a), n)});
  }
  for (int a = 0; a + 1 < n; ++a) {
    if (a % 2 != 0 && a + 2 >= n) continue;  // K would fall off the register
    rules.push_back({a % 2 == 0 ? "x-even" : "x-odd",
                     Generator::two_level_x(a, a + 1),
                     commute_rhs(Generator::two_level_x(a, a + 1), n)});
  }
  return rules;
}

std::size_t check_rewrite_rules(int n) {
  const std::vector<RewriteRule> rules = rewrite_rules(n);
  for (const RewriteRule& r : rules) {
    // Application-order words: IH·lhs = evaluate([lhs, IH]) and
    // rhs_1···rhs_m·IH = evaluate([IH, rhs_m, ..., rhs_1]).
    GeneratorWord lhs(n), rhs(n);
    lhs.push(r.lhs);
    lhs.push(Generator::ih());
    if (r.name != "cancel") {
      rhs.push(Generator::ih());
      for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) rhs.push(*it);
    }
    if (evaluate_word(lhs) != evaluate_word(rhs)) {
      throw InternalError("rewrite rule " + r.name + " with lhs " +
                          r.lhs.to_string() + " is not a matrix identity");
    }
  }
  return rules.size();
}

PairedStep reduce_paired_step(const ScaledDyadicMatrix& u, Side side) {
  if (u.exponent() == 0) {
    throw DomainError("reduce_paired_step: exponent is already zero");
  }
  const BinaryPattern b = binary_pattern(u);
  std::optional<Permutation> p =
      side == Side::Row ? find_row_pairing(b) : is_column_paired(b);
  if (!p) {
    throw DomainError("reduce_paired_step: pattern is not paired");
  }
  PairedStep step{*p, GeneratorWord(u.dim()), u};
  for (auto [a, c] : p->transpositions()) {
    step.fragment.push(Generator::two_level_x(a, c));
    if (side == Side::Row) {
      step.next.swap_rows(a, c);
    } else {
      step.next.swap_cols(a, c);
    }
  }
  if (side == Side::Row) {
    step.next.ih_rows();
  } else {
    step.next.ih_cols();
  }
  step.fragment.push(Generator::ih());
  if (step.next.exponent() >= u.exponent()) {
    throw InternalError("reduce_paired_step: exponent did not decrease");
  }
  return step;
}

ConjugateStep conjugate_step(const ScaledDyadicMatrix& u) {
  if (u.dim() != 8) {
    throw DomainError("conjugate_step: dimension must be 8");
  }
  if (u.exponent() < 2) {
    throw DomainError("conjugate_step: exponent must be at least 2");
  }
  const BinaryPattern b = binary_pattern(u);
  if (find_row_pairing(b) || is_column_paired(b)) {
    throw DomainError("conjugate_step: pattern is already paired");
  }
  // The conjugation argument needs every aligned 2x2 block of the pattern
  // to have evenly many ones, which holds for the canonical tables (and
  // their transposes) but is not permutation-invariant. Align first:
  // observed(i, j) = T[rp[i]][cp[j]], so permuting rows by rp^-1 and
  // columns by cp^-1 makes the pattern equal to T.
  const PatternId id = classify_pattern(b);
  if (id.label != "L" && id.label != "M" && id.label != "N") {
    throw InternalError("conjugate_step: unpaired pattern classified as " +
                        id.label);
  }
  auto invert = [](const Permutation& p) {
    Permutation inv;
    inv.n = p.n;
    inv.image.resize(p.image.size());
    for (int i = 0; i < p.n; ++i) inv.image[size_t(p.image[size_t(i)])] = i;
    return inv;
  };
  ConjugateStep step{GeneratorWord(u.dim()), GeneratorWord(u.dim()), u};
  ScaledDyadicMatrix& next = step.next;
  for (auto [a, c] : invert(id.row_perm).transpositions()) {
    step.left.push(Generator::two_level_x(a, c));
    next.swap_rows(a, c);
  }
  for (auto [a, c] : invert(id.col_perm).transpositions()) {
    step.right.push(Generator::two_level_x(a, c));
    next.swap_cols(a, c);
  }
  next.ih_rows();
  next.ih_cols();
  step.left.push(Generator::ih());
  step.right.push(Generator::ih());
  if (next.exponent() > u.exponent()) {
    throw InternalError("conjugate_step: exponent increased");
  }
  if (next.exponent() > 0) {
    const BinaryPattern b = binary_pattern(next);
    if (!find_row_pairing(b) && !is_column_paired(b)) {
      throw InternalError(
          "conjugate_step: conjugated pattern is neither row- nor "
          "column-paired");
    }
  }
  return step;
}

GlobalResult synthesize_global_traced(const ScaledDyadicMatrix& u) {
  const int n = u.dim();
  if (n != 2 && n != 4 && n != 8) {
    throw DomainError("synthesize_global: dimension must be 2, 4 or 8");
  }
  if (!is_orthogonal(u)) {
    throw DomainError("synthesize_global: matrix is not orthogonal");
  }
  GlobalResult result;
  ScaledDyadicMatrix cur = u;
  std::vector<Generator> lefts;   // in applied (left-multiplication) order
  std::vector<Generator> rights;  // in applied (right-multiplication) order
  const unsigned guard = 4 * u.exponent() + 16;
  unsigned iterations = 0;
  while (cur.exponent() > 0) {
    if (++iterations > guard) {
      throw InternalError("synthesize_global: iteration guard exceeded");
    }
    const unsigned before = cur.exponent();
    const BinaryPattern b = binary_pattern(cur);
    if (find_row_pairing(b)) {
      PairedStep step = reduce_paired_step(cur, Side::Row);
      lefts.insert(lefts.end(), step.fragment.items.begin(),
                   step.fragment.items.end());
      cur = std::move(step.next);
      result.steps.push_back({"row-paired", before, cur.exponent()});
    } else if (is_column_paired(b)) {
      PairedStep step = reduce_paired_step(cur, Side::Column);
      rights.insert(rights.end(), step.fragment.items.begin(),
                    step.fragment.items.end());
      cur = std::move(step.next);
      result.steps.push_back({"column-paired", before, cur.exponent()});
    } else if (n == 8 && cur.exponent() >= 2) {
      ConjugateStep step = conjugate_step(cur);
      lefts.insert(lefts.end(), step.left.items.begin(),
                   step.left.items.end());
      rights.insert(rights.end(), step.right.items.begin(),
                    step.right.items.end());
      cur = std::move(step.next);
      result.steps.push_back({"conjugate", before, cur.exponent()});
    } else {
      break;  // pairing exhausted; hand the residue to the base case
    }
  }
  const unsigned base_before = cur.exponent();
  GeneratorWord base = synthesize_local(
      cur, cur.exponent() % 2 != 0 ? Ring::Scaled : Ring::Integral);
  result.steps.push_back({"base", base_before, 0});

  // cur = L_m···L_1 · u · R_1···R_m, so
  // u = (L_1···L_m) · cur · (R_m···R_1), which in application order is
  // rights ++ base ++ reverse(lefts) since every generator is self-inverse.
  GeneratorWord word(n);
  for (const Generator& g : rights) word.push(g);
  for (const Generator& g : base.items) word.push(g);
  for (auto it = lefts.rbegin(); it != lefts.rend(); ++it) word.push(*it);
  if (evaluate_word(word) != u) {
    throw InternalError("synthesize_global: word does not evaluate to input");
  }
  result.word = std::move(word);
  return result;
}

GeneratorWord synthesize_global(const ScaledDyadicMatrix& u) {
  return synthesize_global_traced(u).word;
}

GeneratorWord eliminate_ih_pairs(const GeneratorWord& w) {
  if (w.n != 8) {
    throw DomainError("eliminate_ih_pairs: dimension must be 8");
  }
  if (w.ih_count() % 2 != 0) {
    throw DomainError("eliminate_ih_pairs: odd number of IH items");
  }
  // Work in product (matrix-multiplication) order: reverse of application
  // order.
  std::vector<Generator> prod(w.items.rbegin(), w.items.rend());
  for (;;) {
    std::size_t first = prod.size();
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (prod[i].kind == GenKind::IH) {
        first = i;
        break;
      }
    }
    if (first == prod.size()) break;
    std::size_t second = prod.size();
    for (std::size_t i = first + 1; i < prod.size(); ++i) {
      if (prod[i].kind == GenKind::IH) {
        second = i;
        break;
      }
    }
    if (second == prod.size()) {
      throw InternalError("eliminate_ih_pairs: unmatched IH");
    }
    // Separator with every transposition made adjacent.
    std::vector<Generator> separator;
    for (std::size_t i = first + 1; i < second; ++i) {
      const Generator& g = prod[i];
      if (g.kind == GenKind::FourLevelK) {
        throw DomainError(
            "eliminate_ih_pairs: four-level K between an IH pair");
      }
      if (g.kind == GenKind::TwoLevelX && g.idx[1] != g.idx[0] + 1) {
        expand_adjacent(g.idx[0], g.idx[1], separator);
      } else {
        separator.push_back(g);
      }
    }
    // IH·s_1···s_m·IH = rhs(s_1)···rhs(s_m)·IH·IH = rhs(s_1)···rhs(s_m).
    std::vector<Generator> replacement;
    for (const Generator& g : separator) {
      const std::vector<Generator> rhs = commute_rhs(g, w.n);
      replacement.insert(replacement.end(), rhs.begin(), rhs.end());
    }
    prod.erase(prod.begin() + long(first), prod.begin() + long(second) + 1);
    prod.insert(prod.begin() + long(first), replacement.begin(),
                replacement.end());
  }
  GeneratorWord out(w.n);
  for (auto it = prod.rbegin(); it != prod.rend(); ++it) out.push(*it);
  return out;
}

}  // namespace tdsynth
