#include "tdsynth/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace tdsynth {

namespace {

int register_dim(int qubits) {
  if (qubits < 1 || qubits > 30) {
    throw DimensionError("circuit: qubit count out of range");
  }
  return 1 << qubits;
}

// Bit of qubit q in basis index i (qubit 0 is the most significant bit).
int bit_of(int i, int q, int m) { return (i >> (m - 1 - q)) & 1; }
int flip(int i, int q, int m) { return i ^ (1 << (m - 1 - q)); }

ScaledDyadicMatrix gate_matrix(const Gate& g, int m) {
  const int dim = register_dim(m);
  if (g.tag == Gate::Tag::Macro) {
    return generator_matrix(g.macro, dim);
  }
  std::vector<Int> entries(size_t(dim) * dim, Int(0));
  auto set = [&](int i, int j, int v) {
    entries[size_t(i) * dim + j] = v;
  };
  unsigned k = 0;
  switch (g.tag) {
    case Gate::Tag::X:
      for (int j = 0; j < dim; ++j) set(flip(j, g.qubits[0], m), j, 1);
      break;
    case Gate::Tag::CX:
      for (int j = 0; j < dim; ++j) {
        const int i = bit_of(j, g.qubits[0], m) ? flip(j, g.qubits[1], m) : j;
        set(i, j, 1);
      }
      break;
    case Gate::Tag::CCX:
      for (int j = 0; j < dim; ++j) {
        const bool on =
            bit_of(j, g.qubits[0], m) && bit_of(j, g.qubits[1], m);
        set(on ? flip(j, g.qubits[2], m) : j, j, 1);
      }
      break;
    case Gate::Tag::H:
      k = 1;
      for (int j = 0; j < dim; ++j) {
        const int b = bit_of(j, g.qubits[0], m);
        // H|0> = |0> + |1>, H|1> = |0> - |1> (over sqrt(2)).
        set(j ^ (b << (m - 1 - g.qubits[0])), j, 1);  // the |0> component
        set(j | (1 << (m - 1 - g.qubits[0])), j, b ? -1 : 1);
      }
      break;
    case Gate::Tag::Macro:
      break;  // handled above
  }
  return ScaledDyadicMatrix::from_entries(dim, k, std::move(entries));
}

}  // namespace

void validate_circuit(const Circuit& c) {
  const int dim = register_dim(c.qubits);
  if (c.ancillas < 0 || c.ancillas > c.qubits) {
    throw DimensionError("circuit: ancilla count out of range");
  }
  for (const Gate& g : c.gates) {
    if (g.tag == Gate::Tag::Macro) {
      g.macro.validate(dim);
      continue;
    }
    const size_t arity = g.tag == Gate::Tag::CCX  ? 3
                         : g.tag == Gate::Tag::CX ? 2
                                                  : 1;
    if (g.qubits.size() != arity) {
      throw DimensionError("circuit: wrong qubit count for gate");
    }
    for (size_t i = 0; i < g.qubits.size(); ++i) {
      if (g.qubits[i] < 0 || g.qubits[i] >= c.qubits) {
        throw DimensionError("circuit: qubit index out of range");
      }
      for (size_t j = i + 1; j < g.qubits.size(); ++j) {
        if (g.qubits[i] == g.qubits[j]) {
          throw DimensionError("circuit: repeated qubit index in gate");
        }
      }
    }
  }
}

Circuit word_to_circuit(const GeneratorWord& w, int m) {
  if (w.n != register_dim(m)) {
    throw DimensionError("word_to_circuit: word dimension is not 2^m");
  }
  Circuit c{m, 0, {}};
  for (const Generator& g : w.items) {
    if (g.kind == GenKind::IH) {
      c.gates.push_back(Gate::h(m - 1));
    } else {
      c.gates.push_back(Gate::macro_gate(g));
    }
  }
  return c;
}

ScaledDyadicMatrix evaluate_circuit(const Circuit& c) {
  validate_circuit(c);
  ScaledDyadicMatrix u = ScaledDyadicMatrix::identity(register_dim(c.qubits));
  for (const Gate& g : c.gates) {
    u = multiply(gate_matrix(g, c.qubits), u);
  }
  return u;
}

bool check_ancilla_contract(const Circuit& c,
                            const ScaledDyadicMatrix& u_expected) {
  if (c.ancillas < 1) {
    throw DomainError("check_ancilla_contract: circuit has no ancilla");
  }
  const int dim = register_dim(c.qubits);
  const int sub = u_expected.dim();
  if (sub != dim >> c.ancillas) {
    throw DimensionError(
        "check_ancilla_contract: expected matrix does not match the "
        "non-ancilla register");
  }
  const ScaledDyadicMatrix full = evaluate_circuit(c);
  // Ancillas are the most significant qubits, so all-ancillas-|0> states
  // are the first `sub` basis vectors: the ancilla contract means column
  // j < sub has top block u_expected(:, j) and zeros below.
  for (int i = sub; i < dim; ++i) {
    for (int j = 0; j < sub; ++j) {
      if (full.at(i, j) != 0) return false;
    }
  }
  std::vector<Int> block(size_t(sub) * sub);
  for (int i = 0; i < sub; ++i) {
    for (int j = 0; j < sub; ++j) block[size_t(i) * sub + j] = full.at(i, j);
  }
  return ScaledDyadicMatrix::from_entries(sub, full.exponent(),
                                          std::move(block)) == u_expected;
}

Circuit assemble_wrapper_circuit(const GeneratorWord& word,
                                 const WrapperSpec& wrapper) {
  if (!wrapper.available) {
    throw DomainError(
        "assemble_wrapper_circuit: wrapper unavailable for this ring");
  }
  int m = 0;
  while ((1 << m) < word.n) ++m;
  if ((1 << m) != word.n || m < 1) {
    throw DimensionError(
        "assemble_wrapper_circuit: word dimension is not a power of two "
        ">= 2");
  }
  Circuit c = word_to_circuit(word, m);
  c.ancillas = 1;  // qubit 0, the most significant
  std::vector<Gate> gates;
  gates.push_back(Gate::x(0));
  gates.push_back(Gate::h(0));
  gates.insert(gates.end(), c.gates.begin(), c.gates.end());
  gates.push_back(Gate::h(0));
  c.gates = std::move(gates);
  return c;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.qubits << " ancillas " << c.ancillas << "\n";
  for (const Gate& g : c.gates) {
    switch (g.tag) {
      case Gate::Tag::X:
        os << "x " << g.qubits[0] << "\n";
        break;
      case Gate::Tag::CX:
        os << "cx " << g.qubits[0] << " " << g.qubits[1] << "\n";
        break;
      case Gate::Tag::CCX:
        os << "ccx " << g.qubits[0] << " " << g.qubits[1] << " "
           << g.qubits[2] << "\n";
        break;
      case Gate::Tag::H:
        os << "h " << g.qubits[0] << "\n";
        break;
      case Gate::Tag::Macro:
        os << "gen " << g.macro.to_string() << "\n";
        break;
    }
  }
  return os.str();
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Circuit c;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string kw;
    ls >> kw;
    if (!have_header) {
      std::string kw2;
      if (kw != "qubits" || !(ls >> c.qubits >> kw2 >> c.ancillas) ||
          kw2 != "ancillas") {
        throw ParseError("expected 'qubits <m> ancillas <a>', got: " + line);
      }
      have_header = true;
      continue;
    }
    auto read_ints = [&](size_t count) {
      std::vector<int> v(count);
      for (size_t i = 0; i < count; ++i) {
        if (!(ls >> v[i])) {
          throw ParseError("bad qubit index in line: " + line);
        }
      }
      return v;
    };
    if (kw == "x") {
      auto v = read_ints(1);
      c.gates.push_back(Gate::x(v[0]));
    } else if (kw == "h") {
      auto v = read_ints(1);
      c.gates.push_back(Gate::h(v[0]));
    } else if (kw == "cx") {
      auto v = read_ints(2);
      c.gates.push_back(Gate::cx(v[0], v[1]));
    } else if (kw == "ccx") {
      auto v = read_ints(3);
      c.gates.push_back(Gate::ccx(v[0], v[1], v[2]));
    } else if (kw == "gen") {
      std::string token;
      if (!(ls >> token)) throw ParseError("missing generator in: " + line);
      c.gates.push_back(Gate::macro_gate(parse_generator(token)));
    } else {
      throw ParseError("unknown gate in line: " + line);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing tokens in line: " + line);
  }
  if (!have_header) throw ParseError("missing 'qubits <m> ancillas <a>'");
  validate_circuit(c);
  return c;
}

}  // namespace tdsynth
