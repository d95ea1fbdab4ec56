#include "tdsynth/pattern.hpp"

#include <algorithm>
#include <map>

namespace tdsynth {

BinaryPattern BinaryPattern::transposed() const {
  BinaryPattern t;
  t.n = n;
  t.bits.resize(bits.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
  return t;
}

int BinaryPattern::row_weight(int i) const {
  int w = 0;
  for (int j = 0; j < n; ++j) w += at(i, j);
  return w;
}

int BinaryPattern::col_weight(int j) const {
  int w = 0;
  for (int i = 0; i < n; ++i) w += at(i, j);
  return w;
}

BinaryPattern binary_pattern(const ScaledDyadicMatrix& u) {
  BinaryPattern b;
  b.n = u.dim();
  b.bits.resize(size_t(b.n) * b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) b.at(i, j) = is_odd(u.at(i, j)) ? 1 : 0;
  return b;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.n = n;
  p.image.resize(size_t(n));
  for (int i = 0; i < n; ++i) p.image[size_t(i)] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (image[size_t(i)] != i) return false;
  return true;
}

std::vector<std::pair<int, int>> Permutation::transpositions() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> cur(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cur[size_t(i)] = i;
  for (int i = 0; i < n; ++i) {
    int p = i;
    while (cur[size_t(p)] != image[size_t(i)]) ++p;
    if (p != i) {
      std::swap(cur[size_t(i)], cur[size_t(p)]);
      out.emplace_back(i, p);
    }
  }
  return out;
}

std::optional<Permutation> find_row_pairing(const BinaryPattern& b) {
  if (b.n % 2 != 0) throw DomainError("row pairing requires even dimension");
  std::map<std::vector<uint8_t>, std::vector<int>> groups;
  for (int i = 0; i < b.n; ++i) {
    std::vector<uint8_t> row(b.bits.begin() + size_t(i) * b.n,
                             b.bits.begin() + size_t(i + 1) * b.n);
    groups[row].push_back(i);
  }
  Permutation p;
  p.n = b.n;
  for (const auto& [row, members] : groups) {
    if (members.size() % 2 != 0) return std::nullopt;
    p.image.insert(p.image.end(), members.begin(), members.end());
  }
  return p;
}

std::optional<Permutation> is_column_paired(const BinaryPattern& b) {
  return find_row_pairing(b.transposed());
}

namespace {

BinaryPattern make_pattern(std::initializer_list<const char*> rows) {
  BinaryPattern b;
  b.n = int(rows.size());
  b.bits.reserve(size_t(b.n) * b.n);
  for (const char* r : rows)
    for (const char* c = r; *c; ++c) b.bits.push_back(uint8_t(*c - '0'));
  return b;
}

std::vector<std::pair<std::string, BinaryPattern>> make_tables8() {
  return {
      {"A", make_pattern({"11111111", "11111111", "11111111", "11111111",
                          "11111111", "11111111", "11111111", "11111111"})},
      {"B", make_pattern({"11111111", "11111111", "11111111", "11111111",
                          "11110000", "11110000", "11110000", "11110000"})},
      {"C", make_pattern({"11111111", "11111111", "11110000", "11110000",
                          "11001100", "11001100", "11000011", "11000011"})},
      {"D", make_pattern({"11110000", "11110000", "11110000", "11110000",
                          "11001100", "11001100", "11001100", "11001100"})},
      {"E", make_pattern({"11111111", "11111111", "11110000", "11110000",
                          "00001111", "00001111", "00000000", "00000000"})},
      {"F", make_pattern({"11110000", "11110000", "11001100", "11001100",
                          "10101010", "10101010", "10010110", "10010110"})},
      {"G", make_pattern({"11110000", "11110000", "11001100", "11001100",
                          "00111100", "00111100", "00000000", "00000000"})},
      {"H", make_pattern({"11110000", "11110000", "11001100", "11001100",
                          "00110011", "00110011", "00001111", "00001111"})},
      {"I", make_pattern({"11110000", "11110000", "11110000", "11110000",
                          "00001111", "00001111", "00001111", "00001111"})},
      {"J", make_pattern({"11110000", "11110000", "11110000", "11110000",
                          "00000000", "00000000", "00000000", "00000000"})},
      {"K", make_pattern({"11111111", "11111111", "11111111", "11111111",
                          "00000000", "00000000", "00000000", "00000000"})},
      {"L", make_pattern({"11111111", "11110000", "11001100", "11000011",
                          "10101010", "10100101", "10011001", "10010110"})},
      {"M", make_pattern({"11110000", "11001100", "10101010", "10010110",
                          "01101001", "01010101", "00110011", "00001111"})},
      {"N", make_pattern({"11110000", "11001100", "10101010", "10010110",
                          "01100110", "01011010", "00111100", "00000000"})},
  };
}

std::vector<std::pair<std::string, BinaryPattern>> make_tables4() {
  return {
      {"B0", make_pattern({"1100", "1100", "0000", "0000"})},
      {"B1", make_pattern({"1100", "1100", "0011", "0011"})},
      {"B2", make_pattern({"1111", "1111", "1111", "1111"})},
  };
}

// Lex-smallest perfect matching helpers over a compatibility relation
// compat(j, c): observed column j may map to table column c.

bool augment(int j, const std::vector<std::vector<uint8_t>>& compat,
             std::vector<int>& match_col, std::vector<uint8_t>& seen, int n) {
  for (int c = 0; c < n; ++c) {
    if (!compat[size_t(j)][size_t(c)] || seen[size_t(c)]) continue;
    seen[size_t(c)] = 1;
    if (match_col[size_t(c)] < 0 ||
        augment(match_col[size_t(c)], compat, match_col, seen, n)) {
      match_col[size_t(c)] = j;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const std::vector<std::vector<uint8_t>>& compat,
                          int n) {
  std::vector<int> match_col(size_t(n), -1);
  for (int j = 0; j < n; ++j) {
    std::vector<uint8_t> seen(size_t(n), 0);
    if (!augment(j, compat, match_col, seen, n)) return false;
  }
  return true;
}

// Smallest col_perm such that compat[j][col_perm[j]] holds for all j.
std::optional<std::vector<int>> lex_smallest_matching(
    std::vector<std::vector<uint8_t>> compat, int n) {
  if (!has_perfect_matching(compat, n)) return std::nullopt;
  std::vector<int> cp(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    bool placed = false;
    for (int c = 0; c < n && !placed; ++c) {
      if (!compat[size_t(j)][size_t(c)]) continue;
      // tentatively pin j -> c and test the rest
      auto trial = compat;
      for (int c2 = 0; c2 < n; ++c2) trial[size_t(j)][size_t(c2)] = 0;
      trial[size_t(j)][size_t(c)] = 1;
      for (int j2 = 0; j2 < n; ++j2)
        if (j2 != j) trial[size_t(j2)][size_t(c)] = 0;
      if (has_perfect_matching(trial, n)) {
        cp[size_t(j)] = c;
        compat = std::move(trial);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;  // unreachable after the initial check
  }
  return cp;
}

struct Witness {
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

// Backtracking over row_perm positions in ascending order; the first leaf
// reached is the lex-smallest row_perm, and within it the lex-smallest
// col_perm is chosen.
bool search_rows(const BinaryPattern& b, const BinaryPattern& t, int pos,
                 std::vector<int>& rp, std::vector<uint8_t>& used,
                 std::vector<std::vector<uint8_t>>& compat, Witness& out) {
  const int n = b.n;
  if (pos == n) {
    auto cp = lex_smallest_matching(compat, n);
    if (!cp) return false;
    out.row_perm = rp;
    out.col_perm = *cp;
    return true;
  }
  for (int src = 0; src < n; ++src) {
    if (used[size_t(src)]) continue;
    // refine column compatibility with the constraint b(pos, j) = t(src, c)
    auto saved = compat;
    bool feasible = true;
    for (int j = 0; j < n && feasible; ++j) {
      bool any = false;
      for (int c = 0; c < n; ++c) {
        if (compat[size_t(j)][size_t(c)] &&
            b.at(pos, j) != t.at(src, c))
          compat[size_t(j)][size_t(c)] = 0;
        any = any || compat[size_t(j)][size_t(c)];
      }
      feasible = any;
    }
    if (feasible && has_perfect_matching(compat, n)) {
      rp[size_t(pos)] = src;
      used[size_t(src)] = 1;
      if (search_rows(b, t, pos + 1, rp, used, compat, out)) return true;
      used[size_t(src)] = 0;
    }
    compat = std::move(saved);
  }
  return false;
}

std::optional<Witness> match_against(const BinaryPattern& b,
                                     const BinaryPattern& t) {
  const int n = b.n;
  std::vector<int> rp(static_cast<size_t>(n));
  std::vector<uint8_t> used(size_t(n), 0);
  std::vector<std::vector<uint8_t>> compat(
      size_t(n), std::vector<uint8_t>(size_t(n), 1));
  Witness w;
  if (search_rows(b, t, 0, rp, used, compat, w)) return w;
  return std::nullopt;
}

}  // namespace

const std::vector<std::pair<std::string, BinaryPattern>>& pattern_tables(
    int n) {
  static const auto tables8 = make_tables8();
  static const auto tables4 = make_tables4();
  if (n == 8) return tables8;
  if (n == 4) return tables4;
  throw DomainError("pattern tables exist only for dimensions 4 and 8");
}

PatternId classify_pattern(const BinaryPattern& b) {
  if (b.n != 4 && b.n != 8)
    throw DomainError("classify_pattern: dimension must be 4 or 8");
  // Some tables are transposes of each other up to permutation (e.g. the
  // two block patterns with row weights {8,8,4,4,4,4,0,0}), so a direct
  // match for every label is tried before any transposed match.
  for (bool tr : {false, true}) {
    if (tr && b.n != 8) break;
    for (const auto& [label, table] : pattern_tables(b.n)) {
      auto w = match_against(b, tr ? table.transposed() : table);
      if (!w) continue;
      PatternId id;
      id.label = label;
      id.transposed = tr;
      id.row_perm = Permutation{b.n, std::move(w->row_perm)};
      id.col_perm = Permutation{b.n, std::move(w->col_perm)};
      return id;
    }
  }
  throw DomainError(
      "classify_pattern: no table matches; input is outside the stated "
      "group/lde regime or there is a bug");
}

BinaryPattern reconstruct_pattern(const PatternId& id) {
  const auto& tables = pattern_tables(id.row_perm.n);
  const BinaryPattern* table = nullptr;
  for (const auto& [label, t] : tables)
    if (label == id.label) table = &t;
  if (!table) throw DomainError("unknown pattern label: " + id.label);
  BinaryPattern t = id.transposed ? table->transposed() : *table;
  BinaryPattern out;
  out.n = t.n;
  out.bits.resize(t.bits.size());
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      out.at(i, j) = t.at(id.row_perm.image[size_t(i)],
                          id.col_perm.image[size_t(j)]);
  return out;
}

}  // namespace tdsynth
