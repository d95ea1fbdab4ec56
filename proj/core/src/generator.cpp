#include "tdsynth/generator.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tdsynth {

void Generator::validate(int n) const {
  switch (kind) {
    case GenKind::NegOne:
      if (idx[0] < 0 || idx[0] >= n)
        throw DimensionError("(-1) generator index out of range");
      return;
    case GenKind::TwoLevelX:
      if (idx[0] < 0 || idx[0] >= idx[1] || idx[1] >= n)
        throw DimensionError("X generator indices out of range or unordered");
      return;
    case GenKind::FourLevelK:
      if (idx[0] < 0 || idx[0] >= idx[1] || idx[1] >= idx[2] ||
          idx[2] >= idx[3] || idx[3] >= n)
        throw DimensionError("K generator indices out of range or unordered");
      return;
    case GenKind::IH:
      if (n % 2 != 0) throw DomainError("IH generator requires even dimension");
      return;
  }
  throw InternalError("unknown generator kind");
}

std::string Generator::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::NegOne:
      os << "M[" << idx[0] << "]";
      break;
    case GenKind::TwoLevelX:
      os << "X[" << idx[0] << "," << idx[1] << "]";
      break;
    case GenKind::FourLevelK:
      os << "K[" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3]
         << "]";
      break;
    case GenKind::IH:
      os << "IH";
      break;
  }
  return os.str();
}

size_t GeneratorWord::ih_count() const {
  return size_t(std::count_if(items.begin(), items.end(), [](const Generator& g) {
    return g.kind == GenKind::IH;
  }));
}

void GeneratorWord::append(const GeneratorWord& w) {
  if (w.n != n) throw DimensionError("append: word dimension mismatch");
  items.insert(items.end(), w.items.begin(), w.items.end());
}

ScaledDyadicMatrix generator_matrix(const Generator& g, int n) {
  g.validate(n);
  ScaledDyadicMatrix m = ScaledDyadicMatrix::identity(n);
  apply_left_in_place(g, m);
  return m;
}

void apply_left_in_place(const Generator& g, ScaledDyadicMatrix& u) {
  g.validate(u.dim());
  switch (g.kind) {
    case GenKind::NegOne:
      u.negate_row(g.idx[0]);
      return;
    case GenKind::TwoLevelX:
      u.swap_rows(g.idx[0], g.idx[1]);
      return;
    case GenKind::FourLevelK:
      u.k_rows(g.idx[0], g.idx[1], g.idx[2], g.idx[3]);
      return;
    case GenKind::IH:
      u.ih_rows();
      return;
  }
}

void apply_left_in_place(const Generator& g, DyadicVector& v) {
  g.validate(v.dim());
  switch (g.kind) {
    case GenKind::NegOne:
      v.negate_entry(g.idx[0]);
      return;
    case GenKind::TwoLevelX:
      v.swap_entries(g.idx[0], g.idx[1]);
      return;
    case GenKind::FourLevelK:
      v.k_entries(g.idx[0], g.idx[1], g.idx[2], g.idx[3]);
      return;
    case GenKind::IH:
      v.ih_entries();
      return;
  }
}

void apply_right_in_place(const Generator& g, ScaledDyadicMatrix& u) {
  g.validate(u.dim());
  switch (g.kind) {
    case GenKind::NegOne:
      u.negate_col(g.idx[0]);
      return;
    case GenKind::TwoLevelX:
      u.swap_cols(g.idx[0], g.idx[1]);
      return;
    case GenKind::FourLevelK:
      u.k_cols(g.idx[0], g.idx[1], g.idx[2], g.idx[3]);
      return;
    case GenKind::IH:
      u.ih_cols();
      return;
  }
}

ScaledDyadicMatrix apply_left(const Generator& g, const ScaledDyadicMatrix& u) {
  ScaledDyadicMatrix r = u;
  apply_left_in_place(g, r);
  return r;
}

ScaledDyadicMatrix evaluate_word(const GeneratorWord& w) {
  ScaledDyadicMatrix u = ScaledDyadicMatrix::identity(w.n);
  for (const Generator& g : w.items) apply_left_in_place(g, u);
  return u;
}

GeneratorWord word_inverse(const GeneratorWord& w) {
  GeneratorWord r;
  r.n = w.n;
  r.items.assign(w.items.rbegin(), w.items.rend());
  return r;
}

namespace {

// splitmix64; fully deterministic across platforms, unlike the standard
// distributions.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t bounded(uint64_t m) { return next() % m; }
};

Generator random_generator(Rng& rng, int n, Ring ring) {
  const bool allow_ih = ring == Ring::Scaled && n % 2 == 0;
  const bool allow_k = n >= 4;
  if (allow_ih && rng.bounded(4) == 0) return Generator::ih();
  for (;;) {
    switch (rng.bounded(3)) {
      case 0:
        return Generator::neg_one(int(rng.bounded(uint64_t(n))));
      case 1: {
        int a = int(rng.bounded(uint64_t(n)));
        int b = int(rng.bounded(uint64_t(n)));
        if (a == b) continue;
        return Generator::two_level_x(std::min(a, b), std::max(a, b));
      }
      default: {
        if (!allow_k) continue;
        // random 4-subset of {0..n-1}
        std::array<int, 4> s;
        int filled = 0;
        while (filled < 4) {
          int c = int(rng.bounded(uint64_t(n)));
          bool dup = false;
          for (int i = 0; i < filled; ++i) dup = dup || s[size_t(i)] == c;
          if (!dup) s[size_t(filled++)] = c;
        }
        std::sort(s.begin(), s.end());
        return Generator::four_level_k(s[0], s[1], s[2], s[3]);
      }
    }
  }
}

}  // namespace

std::pair<GeneratorWord, ScaledDyadicMatrix> random_element(int n,
                                                            size_t word_length,
                                                            Ring ring,
                                                            uint64_t seed) {
  if (n < 2) throw DimensionError("random_element: n must be at least 2");
  Rng rng(seed);
  GeneratorWord w;
  w.n = n;
  ScaledDyadicMatrix u = ScaledDyadicMatrix::identity(n);
  for (size_t i = 0; i < word_length; ++i) {
    Generator g = random_generator(rng, n, ring);
    w.push(g);
    apply_left_in_place(g, u);
  }
  return {std::move(w), std::move(u)};
}

std::pair<GeneratorWord, ScaledDyadicMatrix> random_matrix_with_lde(
    int n, unsigned k_target, Ring ring, uint64_t seed) {
  if (n < 2) throw DimensionError("random_matrix_with_lde: n must be >= 2");
  if (ring == Ring::Integral && k_target % 2 != 0)
    throw DomainError("integral ring admits only even exponents");
  if (k_target > 0 && n < 4 && !(ring == Ring::Scaled && n % 2 == 0))
    throw DomainError("no exponent-raising generator at this dimension/ring");
  // The scaled exponent is bounded in low dimensions (at most 1 when
  // n = 2 and at most 2 when n = 4), so larger targets are unreachable.
  if ((n == 2 && k_target > 1) || (n == 4 && k_target > 2))
    throw DomainError("requested exponent exceeds the dimension-" +
                      std::to_string(n) + " bound");
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    GeneratorWord w;
    w.n = n;
    ScaledDyadicMatrix u = ScaledDyadicMatrix::identity(n);
    const size_t max_steps = 64 + size_t(k_target) * 64;
    for (size_t i = 0; i < max_steps && u.exponent() != k_target; ++i) {
      Generator g = random_generator(rng, n, ring);
      w.push(g);
      apply_left_in_place(g, u);
    }
    if (u.exponent() == k_target) return {std::move(w), std::move(u)};
  }
}

std::string format_word(const GeneratorWord& w) {
  std::ostringstream os;
  os << "dim " << w.n << "\n";
  for (const Generator& g : w.items) os << g.to_string() << "\n";
  return os.str();
}

namespace {

std::vector<int> parse_index_list(const std::string& s, size_t expect,
                                  const std::string& line) {
  // s is the text between '[' and ']'
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad generator index in line: " + line);
    }
  }
  if (out.size() != expect)
    throw ParseError("wrong number of indices in line: " + line);
  return out;
}

}  // namespace

Generator parse_generator(const std::string& token) {
  if (token == "IH") return Generator::ih();
  if (token.size() > 2 && token[1] == '[' && token.back() == ']') {
    const std::string inner = token.substr(2, token.size() - 3);
    switch (token[0]) {
      case 'M': {
        auto v = parse_index_list(inner, 1, token);
        return Generator::neg_one(v[0]);
      }
      case 'X': {
        auto v = parse_index_list(inner, 2, token);
        return Generator::two_level_x(v[0], v[1]);
      }
      case 'K': {
        auto v = parse_index_list(inner, 4, token);
        return Generator::four_level_k(v[0], v[1], v[2], v[3]);
      }
      default:
        break;
    }
  }
  throw ParseError("unknown generator: " + token);
}

GeneratorWord parse_word(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  GeneratorWord w;
  bool have_dim = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // skip blanks and comments
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string body = line.substr(first);
    if (!have_dim) {
      std::istringstream hs(body);
      std::string kw;
      int n = 0;
      if (!(hs >> kw >> n) || kw != "dim" || n < 1)
        throw ParseError("expected header 'dim <n>', got: " + line);
      w.n = n;
      have_dim = true;
      continue;
    }
    Generator g = parse_generator(body);
    try {
      g.validate(w.n);
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()) + " in line: " + line);
    }
    w.push(g);
  }
  if (!have_dim) throw ParseError("missing 'dim <n>' header");
  return w;
}

}  // namespace tdsynth
