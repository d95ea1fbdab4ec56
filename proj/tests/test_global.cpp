#include <doctest.h>

#include "oracle.hpp"
#include "tdsynth/global.hpp"

using namespace tdsynth;

TEST_SUITE_BEGIN("global");

TEST_CASE("rewrite rules are exact matrix identities") {
  CHECK(check_rewrite_rules(8) == 16);
  CHECK(check_rewrite_rules(2) >= 3);

  // Cross-check every dim-8 rule against the rational oracle too.
  for (const RewriteRule& r : rewrite_rules(8)) {
    GeneratorWord lhs(8), rhs(8);
    lhs.push(r.lhs);
    lhs.push(Generator::ih());
    if (r.name != "cancel") {
      rhs.push(Generator::ih());
      for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) rhs.push(*it);
    }
    CAPTURE(r.name);
    CAPTURE(r.lhs.to_string());
    CHECK(oracle::evaluate(lhs) == oracle::evaluate(rhs));
  }
}

TEST_CASE("reduce_paired_step on H in dimension 2") {
  auto h = ScaledDyadicMatrix::from_entries(2, 1, {1, 1, 1, -1});
  PairedStep step = reduce_paired_step(h, Side::Row);
  CHECK(step.perm.is_identity());
  CHECK(step.next.is_identity());
  CHECK(step.fragment.length() == 1);
  CHECK(step.fragment.items[0] == Generator::ih());
}

TEST_CASE("reduce_paired_step on K in dimension 4") {
  auto h = ScaledDyadicMatrix::from_entries(2, 1, {1, 1, 1, -1});
  auto k4 = kron(h, h);
  REQUIRE(k4.exponent() == 2);
  PairedStep step = reduce_paired_step(k4, Side::Row);
  CHECK(step.next.exponent() < 2);
}

TEST_CASE("reduce_paired_step refuses unpaired patterns") {
  // Pattern L admits no pairing; realize an L-pattern matrix by searching
  // random dim-8 scaled matrices.
  bool found = false;
  for (uint64_t seed = 0; seed < 400 && !found; ++seed) {
    auto [w, u] = random_matrix_with_lde(8, 2 + unsigned(seed % 5),
                                         Ring::Scaled, 9000 + seed);
    const BinaryPattern b = binary_pattern(u);
    if (find_row_pairing(b) || is_column_paired(b)) continue;
    found = true;
    CHECK_THROWS_AS(reduce_paired_step(u, Side::Row), DomainError);
    CHECK_THROWS_AS(reduce_paired_step(u, Side::Column), DomainError);
    // Conjugation is the designated escape hatch for exactly this case.
    ConjugateStep step = conjugate_step(u);
    CHECK(step.next.exponent() <= u.exponent());
    CHECK(step.left.items.back().kind == GenKind::IH);
    CHECK(step.right.items.back().kind == GenKind::IH);
    // Replaying left·u·right must reproduce step.next.
    ScaledDyadicMatrix replay = u;
    for (const Generator& g : step.left.items) apply_left_in_place(g, replay);
    for (const Generator& g : step.right.items) {
      apply_right_in_place(g, replay);
    }
    CHECK(replay == step.next);
  }
  CHECK(found);
}

TEST_CASE("synthesize_global trivial and tiny cases") {
  auto r = synthesize_global_traced(ScaledDyadicMatrix::identity(4));
  CHECK(r.word.length() == 0);

  auto h = ScaledDyadicMatrix::from_entries(2, 1, {1, 1, 1, -1});
  GeneratorWord w = synthesize_global(h);
  REQUIRE(w.length() == 1);
  CHECK(w.items[0] == Generator::ih());
}

TEST_CASE("synthesize_global resynthesis at n in {2,4,8}") {
  for (int n : {2, 4, 8}) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      auto [w0, u] = random_element(n, 70, Ring::Scaled,
                                    1000 + 100 * uint64_t(n) + seed);
      GlobalResult r = synthesize_global_traced(u);
      CHECK(evaluate_word(r.word) == u);
      // Strict progress in the recorded steps.
      for (const StepRecord& s : r.steps) {
        if (s.kind == "row-paired" || s.kind == "column-paired") {
          CHECK(s.lde_before > s.lde_after);
        } else if (s.kind == "conjugate") {
          CHECK(s.lde_before >= s.lde_after);
        }
      }
    }
  }
}

TEST_CASE("synthesize_global matches the oracle on a deep instance") {
  auto [w0, u] = random_matrix_with_lde(8, 20, Ring::Scaled, 4242);
  GeneratorWord w = synthesize_global(u);
  CHECK(oracle::evaluate(w) == oracle::from_scaled(u));
  // O(k) growth: generous linear envelope at n = 8.
  CHECK(w.length() <= size_t(40 * 20 + 80));
}

TEST_CASE("synthesize_global rejects unsupported inputs") {
  CHECK_THROWS_AS(synthesize_global(ScaledDyadicMatrix::identity(6)),
                  DomainError);
  auto bad = ScaledDyadicMatrix::from_entries(2, 0, {1, 1, 0, 1});
  CHECK_THROWS_AS(synthesize_global(bad), DomainError);
}

TEST_CASE("scaled lde bounds in dimensions 2 and 4") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    auto [w2, u2] = random_element(2, 50, Ring::Scaled, 2000 + seed);
    CHECK(u2.exponent() <= 1);
    auto [w4, u4] = random_element(4, 50, Ring::Scaled, 3000 + seed);
    CHECK(u4.exponent() <= 2);
  }
}

TEST_CASE("eliminate_ih_pairs on the published examples") {
  GeneratorWord w(8);
  SUBCASE("adjacent cancellation") {
    w.push(Generator::ih());
    w.push(Generator::ih());
    CHECK(eliminate_ih_pairs(w).length() == 0);
  }
  SUBCASE("conjugated adjacent transposition, even index") {
    w.push(Generator::ih());
    w.push(Generator::two_level_x(0, 1));
    w.push(Generator::ih());
    GeneratorWord out = eliminate_ih_pairs(w);
    REQUIRE(out.length() == 1);
    CHECK(out.items[0] == Generator::neg_one(1));
  }
  SUBCASE("conjugated sign flip, odd index") {
    w.push(Generator::ih());
    w.push(Generator::neg_one(1));
    w.push(Generator::ih());
    GeneratorWord out = eliminate_ih_pairs(w);
    REQUIRE(out.length() == 1);
    CHECK(out.items[0] == Generator::two_level_x(0, 1));
  }
  SUBCASE("non-adjacent transposition goes through the expansion") {
    w.push(Generator::ih());
    w.push(Generator::two_level_x(2, 7));
    w.push(Generator::ih());
    GeneratorWord out = eliminate_ih_pairs(w);
    CHECK(out.ih_count() == 0);
    CHECK(oracle::evaluate(out) == oracle::evaluate(w));
  }
}

TEST_CASE("eliminate_ih_pairs rejects structural violations") {
  GeneratorWord odd(8);
  odd.push(Generator::ih());
  CHECK_THROWS_AS(eliminate_ih_pairs(odd), DomainError);

  GeneratorWord with_k(8);
  with_k.push(Generator::ih());
  with_k.push(Generator::four_level_k(0, 1, 2, 3));
  with_k.push(Generator::ih());
  CHECK_THROWS_AS(eliminate_ih_pairs(with_k), DomainError);
}

TEST_CASE("integral elimination end to end") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto [w0, u] = random_matrix_with_lde(8, 2 * (1 + unsigned(seed % 5)),
                                          Ring::Integral, 5000 + seed);
    GeneratorWord w = synthesize_global(u);
    CHECK(w.ih_count() % 2 == 0);
    GeneratorWord reduced = eliminate_ih_pairs(w);
    CHECK(reduced.ih_count() == 0);
    CHECK(evaluate_word(reduced) == u);
  }
}

TEST_SUITE_END();
