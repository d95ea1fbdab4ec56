#include <doctest.h>

#include "oracle.hpp"
#include "tdsynth/circuit.hpp"

using namespace tdsynth;

TEST_SUITE_BEGIN("circuit");

TEST_CASE("two Hadamards cancel") {
  Circuit c{1, 0, {Gate::h(0), Gate::h(0)}};
  CHECK(evaluate_circuit(c).is_identity());
}

TEST_CASE("CCX evaluates to the block-diagonal Toffoli matrix") {
  Circuit c{3, 0, {Gate::ccx(0, 1, 2)}};
  std::vector<Int> e(64, 0);
  for (int j = 0; j < 6; ++j) e[size_t(j) * 8 + j] = 1;
  e[size_t(6) * 8 + 7] = 1;
  e[size_t(7) * 8 + 6] = 1;
  CHECK(evaluate_circuit(c) ==
        ScaledDyadicMatrix::from_entries(8, 0, std::move(e)));
}

TEST_CASE("qubit 0 is the most significant index") {
  // H on qubit 0 at m=2 is H (x) I, not I (x) H.
  Circuit c{2, 0, {Gate::h(0)}};
  auto h = ScaledDyadicMatrix::from_entries(2, 1, {1, 1, 1, -1});
  CHECK(evaluate_circuit(c) == kron(h, ScaledDyadicMatrix::identity(2)));

  Circuit c1{2, 0, {Gate::h(1)}};
  CHECK(evaluate_circuit(c1) == kron(ScaledDyadicMatrix::identity(2), h));

  // X on qubit 1 flips the low bit: swaps basis states 0<->1 and 2<->3.
  Circuit cx{2, 0, {Gate::x(1)}};
  auto m = evaluate_circuit(cx);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(2, 3) == 1);

  // CX with control on the high bit acts only on the 2<->3 pair.
  Circuit ccx{2, 0, {Gate::cx(0, 1)}};
  auto mc = evaluate_circuit(ccx);
  CHECK(mc.at(0, 0) == 1);
  CHECK(mc.at(1, 1) == 1);
  CHECK(mc.at(2, 3) == 1);
  CHECK(mc.at(3, 2) == 1);
}

TEST_CASE("word_to_circuit lowers IH to an H on the last qubit") {
  GeneratorWord w(2);
  w.push(Generator::ih());
  Circuit c = word_to_circuit(w, 1);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::h(0));

  GeneratorWord w8(8);
  w8.push(Generator::ih());
  Circuit c8 = word_to_circuit(w8, 3);
  CHECK(c8.gates[0] == Gate::h(2));
  CHECK(evaluate_circuit(c8) == evaluate_word(w8));
}

TEST_CASE("word/circuit round trip across register sizes") {
  for (int m : {1, 2, 3}) {
    for (uint64_t seed = 0; seed < 8; ++seed) {
      auto [w, u] = random_element(1 << m, 30, Ring::Scaled,
                                   7000 + 10 * uint64_t(m) + seed);
      Circuit c = word_to_circuit(w, m);
      CHECK(evaluate_circuit(c) == u);
    }
  }
  GeneratorWord w(6);
  CHECK_THROWS_AS(word_to_circuit(w, 2), DimensionError);
}

TEST_CASE("wrapper circuit satisfies the ancilla contract") {
  for (int n : {2, 4}) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      // Random integral group element; at n = 2 these are the signed
      // permutations, at n = 4 the exponent caps at 2.
      auto [w0, u] = random_element(n, 20 + int(seed), Ring::Integral,
                                    7100 + uint64_t(n) + seed);
      auto [word, wrapper] = synthesize_householder(u, Ring::Scaled);
      Circuit c = assemble_wrapper_circuit(word, wrapper);
      CHECK(c.qubits == (n == 2 ? 2 : 3));
      CHECK(c.ancillas == 1);
      CHECK(check_ancilla_contract(c, u));
      const ScaledDyadicMatrix uu = multiply(u, u);
      if (uu != u) CHECK_FALSE(check_ancilla_contract(c, uu));

      // A stray X on the ancilla breaks the contract.
      Circuit broken = c;
      broken.gates.push_back(Gate::x(0));
      CHECK_FALSE(check_ancilla_contract(broken, u));
    }
  }
}

TEST_CASE("ancilla contract for the identity wrapper") {
  auto u = ScaledDyadicMatrix::identity(2);
  auto [word, wrapper] = synthesize_householder(u, Ring::Scaled);
  Circuit c = assemble_wrapper_circuit(word, wrapper);
  CHECK(check_ancilla_contract(c, u));
}

TEST_CASE("circuit validation") {
  Circuit bad{2, 0, {Gate::cx(0, 0)}};
  CHECK_THROWS_AS(validate_circuit(bad), DimensionError);
  Circuit oor{2, 0, {Gate::h(2)}};
  CHECK_THROWS_AS(validate_circuit(oor), DimensionError);
  Circuit macro_bad{2, 0, {Gate::macro_gate(Generator::neg_one(5))}};
  CHECK_THROWS_AS(validate_circuit(macro_bad), Error);
}

TEST_CASE("text format round trip is bit-exact") {
  auto [w, u] = random_element(8, 20, Ring::Scaled, 7200);
  Circuit c = word_to_circuit(w, 3);
  c.gates.insert(c.gates.begin(), Gate::ccx(0, 1, 2));
  c.gates.push_back(Gate::cx(1, 2));
  c.gates.push_back(Gate::x(0));
  const std::string text = format_circuit(c);
  Circuit parsed = parse_circuit(text);
  CHECK(parsed == c);
  CHECK(format_circuit(parsed) == text);

  CHECK_THROWS_AS(parse_circuit("h 0\n"), ParseError);  // missing header
  CHECK_THROWS_AS(parse_circuit("qubits 2 ancillas 0\nfoo 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2 ancillas 0\ncx 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2 ancillas 0\ngen Q[0]\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2 ancillas 0\nh 0 0\n"), ParseError);
}

TEST_SUITE_END();
