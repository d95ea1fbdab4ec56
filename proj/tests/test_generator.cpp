#include <doctest.h>

#include "oracle.hpp"
#include "tdsynth/generator.hpp"

using namespace tdsynth;

TEST_SUITE_BEGIN("generator");

TEST_CASE("validate enforces ordering, range and parity") {
  CHECK_NOTHROW(Generator::neg_one(7).validate(8));
  CHECK_THROWS_AS(Generator::neg_one(8).validate(8), DimensionError);
  CHECK_THROWS_AS(Generator::two_level_x(3, 3).validate(8), DimensionError);
  CHECK_THROWS_AS(Generator::two_level_x(5, 2).validate(8), DimensionError);
  CHECK_NOTHROW(Generator::four_level_k(0, 2, 5, 7).validate(8));
  CHECK_THROWS_AS(Generator::four_level_k(0, 2, 2, 7).validate(8),
                  DimensionError);
  CHECK_NOTHROW(Generator::ih().validate(6));
  CHECK_THROWS_AS(Generator::ih().validate(5), DomainError);
}

TEST_CASE("generator matrices match the definitions") {
  for (int n : {4, 8}) {
    std::vector<Generator> gens = {
        Generator::neg_one(n - 1), Generator::two_level_x(0, n - 2),
        Generator::four_level_k(0, 1, n - 2, n - 1), Generator::ih()};
    for (const Generator& g : gens) {
      CAPTURE(g.to_string());
      CHECK(oracle::from_scaled(generator_matrix(g, n)) ==
            oracle::generator(g, n));
    }
  }
}

TEST_CASE("apply_left equals multiplication by the generator matrix") {
  auto [w, u] = random_element(8, 24, Ring::Scaled, 11);
  for (const Generator& g :
       {Generator::neg_one(3), Generator::two_level_x(1, 6),
        Generator::four_level_k(2, 3, 5, 7), Generator::ih()}) {
    CHECK(apply_left(g, u) == multiply(generator_matrix(g, 8), u));
  }
}

TEST_CASE("evaluate_word multiplies in application order") {
  // [G1, G2] must be G2 * G1, not G1 * G2: pick non-commuting items.
  GeneratorWord w(4);
  w.push(Generator::two_level_x(0, 1));
  w.push(Generator::neg_one(0));
  auto m = evaluate_word(w);
  // Applied to e0: X01 sends it to e1, then (-1)_0 leaves e1 alone.
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(0, 1) == -1);
  CHECK(oracle::evaluate(w) == oracle::from_scaled(m));
}

TEST_CASE("evaluate_word matches the oracle on random words") {
  for (int n : {2, 4, 6, 8}) {
    for (uint64_t seed : {1u, 2u, 3u}) {
      auto [w, u] = random_element(n, 40, Ring::Scaled, seed);
      CHECK(oracle::evaluate(w) == oracle::from_scaled(u));
      CHECK(is_orthogonal(u));
    }
  }
}

TEST_CASE("IH word at n=2 conjugating X gives a sign flip") {
  GeneratorWord w(2);
  w.push(Generator::ih());
  w.push(Generator::two_level_x(0, 1));
  w.push(Generator::ih());
  GeneratorWord expect(2);
  expect.push(Generator::neg_one(1));
  CHECK(evaluate_word(w) == evaluate_word(expect));
}

TEST_CASE("word_inverse evaluates to the inverse") {
  auto [w, u] = random_element(8, 30, Ring::Scaled, 5);
  GeneratorWord composite = w;
  composite.append(word_inverse(w));
  CHECK(evaluate_word(composite).is_identity());
}

TEST_CASE("random generation is deterministic and ring-respecting") {
  auto [w1, u1] = random_element(8, 50, Ring::Scaled, 42);
  auto [w2, u2] = random_element(8, 50, Ring::Scaled, 42);
  CHECK(w1 == w2);
  CHECK(u1 == u2);
  auto [w3, u3] = random_element(8, 50, Ring::Scaled, 43);
  CHECK(w1.items != w3.items);

  auto [wi, ui] = random_element(5, 60, Ring::Integral, 7);
  CHECK(wi.ih_count() == 0);
  CHECK(ui.exponent() % 2 == 0);
}

TEST_CASE("random_matrix_with_lde hits the requested exponent") {
  for (unsigned k : {0u, 3u, 9u}) {
    auto [w, u] = random_matrix_with_lde(8, k, Ring::Scaled, 13 + k);
    CHECK(u.exponent() == k);
  }
  auto [w, u] = random_matrix_with_lde(8, 6, Ring::Integral, 3);
  CHECK(u.exponent() == 6);
  CHECK(w.ih_count() == 0);
  CHECK_THROWS_AS(random_matrix_with_lde(8, 5, Ring::Integral, 3),
                  DomainError);
}

TEST_CASE("word text round trip") {
  auto [w, u] = random_element(8, 25, Ring::Scaled, 77);
  auto parsed = parse_word(format_word(w));
  CHECK(parsed == w);

  CHECK_THROWS_AS(parse_word("M[0]\n"), ParseError);         // missing header
  CHECK_THROWS_AS(parse_word("dim 8\nQ[0]\n"), ParseError);  // unknown item
  CHECK_THROWS_AS(parse_word("dim 8\nX[5,2]\n"), ParseError);  // unordered
  CHECK_THROWS_AS(parse_word("dim 5\nIH\n"), ParseError);      // IH at odd n
  CHECK_THROWS_AS(parse_word("dim 4\nM[4]\n"), ParseError);    // out of range

  auto ok = parse_word("# comment\n dim 4 \n\nX[1,3]\nIH\n");
  CHECK(ok.length() == 2);
  CHECK(ok.ih_count() == 1);
}

TEST_SUITE_END();
