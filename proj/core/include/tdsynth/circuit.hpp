#pragma once

#include <string>
#include <vector>

#include "tdsynth/householder.hpp"

namespace tdsynth {

/// One circuit element: a named gate on specific qubits, or a generator
/// acting on the whole register as a single macro gate.
struct Gate {
  enum class Tag { X, CX, CCX, H, Macro };

  Tag tag = Tag::X;
  std::vector<int> qubits;  // 1, 2 or 3 distinct indices; empty for Macro
  Generator macro;          // meaningful only when tag == Macro

  static Gate x(int q) { return {Tag::X, {q}, {}}; }
  static Gate cx(int c, int t) { return {Tag::CX, {c, t}, {}}; }
  static Gate ccx(int c1, int c2, int t) { return {Tag::CCX, {c1, c2, t}, {}}; }
  static Gate h(int q) { return {Tag::H, {q}, {}}; }
  static Gate macro_gate(const Generator& g) { return {Tag::Macro, {}, g}; }

  bool operator==(const Gate& o) const {
    return tag == o.tag && qubits == o.qubits &&
           (tag != Tag::Macro || macro == o.macro);
  }
};

/// Gate list in application order over a register of `qubits` qubits,
/// `ancillas` of which are the most significant ones. Basis state index =
/// big-endian bit string: qubit 0 is the most significant bit, so I (x) H
/// is an H on the last qubit.
struct Circuit {
  int qubits = 0;    // total register size, ancillas included
  int ancillas = 0;  // qubits 0 .. ancillas-1
  std::vector<Gate> gates;

  bool operator==(const Circuit& o) const {
    return qubits == o.qubits && ancillas == o.ancillas && gates == o.gates;
  }
};

/// Throws on out-of-range or repeated qubit indices, or a macro invalid at
/// the register dimension.
void validate_circuit(const Circuit& c);

/// One macro gate per word item; IH becomes an H on the least-significant
/// qubit. Requires w.n = 2^m.
Circuit word_to_circuit(const GeneratorWord& w, int m);

/// Exact matrix of the full register, gates composed in application order.
ScaledDyadicMatrix evaluate_circuit(const Circuit& c);

/// True iff the circuit, restricted to all-ancillas-|0> inputs, keeps the
/// ancillas in |0> and acts as u_expected on the rest: the evaluated
/// matrix has top-left block u_expected and zero blocks below it.
bool check_ancilla_contract(const Circuit& c,
                            const ScaledDyadicMatrix& u_expected);

/// Single-ancilla assembly around a synthesized embedding word: gates
/// X, H on the ancilla (qubit 0), the word's macros, then H on the
/// ancilla. Requires wrapper.available and word dimension 2^(m+1).
Circuit assemble_wrapper_circuit(const GeneratorWord& word,
                                 const WrapperSpec& wrapper);

// Text format: header "qubits <m> ancillas <a>", then one gate per line:
// "h <q>", "x <q>", "cx <c> <t>", "ccx <c1> <c2> <t>", "gen <generator>".
std::string format_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace tdsynth
