#include "tdsynth/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tdsynth {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    return json(static_cast<int64_t>(v.get_si()));
  }
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Int(static_cast<long>(j.get<int64_t>()));
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("matrix JSON: bad integer string: " +
                       j.get<std::string>());
    }
  }
  throw ParseError("matrix JSON: entry is neither integer nor string");
}

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(std::string(what) + ": malformed JSON");
  }
  return j;
}

}  // namespace

std::string matrix_to_json(const ScaledDyadicMatrix& u) {
  json rows = json::array();
  for (int i = 0; i < u.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < u.dim(); ++j) row.push_back(int_to_json(u.at(i, j)));
    rows.push_back(std::move(row));
  }
  json j{{"n", u.dim()}, {"k", u.exponent()}, {"entries", std::move(rows)}};
  return j.dump(2) + "\n";
}

ScaledDyadicMatrix matrix_from_json(const std::string& text) {
  const json j = parse_json(text, "matrix JSON");
  if (!j.is_object() || !j.contains("n") || !j.contains("k") ||
      !j.contains("entries")) {
    throw ParseError("matrix JSON: expected object with n, k, entries");
  }
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer()) {
    throw ParseError("matrix JSON: n and k must be integers");
  }
  const int n = j["n"].get<int>();
  const int64_t k = j["k"].get<int64_t>();
  if (n < 1 || k < 0) {
    throw ParseError("matrix JSON: n must be positive and k non-negative");
  }
  const json& rows = j["entries"];
  if (!rows.is_array() || int(rows.size()) != n) {
    throw ParseError("matrix JSON: entries must be an n x n array");
  }
  std::vector<Int> entries;
  entries.reserve(size_t(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || int(row.size()) != n) {
      throw ParseError("matrix JSON: entries must be an n x n array");
    }
    for (const json& e : row) entries.push_back(int_from_json(e));
  }
  return ScaledDyadicMatrix::from_entries(n, unsigned(k), std::move(entries));
}

std::string pattern_report_json(const PatternId& id) {
  json j{{"label", id.label},
         {"transposed", id.transposed},
         {"row_perm", id.row_perm.image},
         {"col_perm", id.col_perm.image}};
  return j.dump(2) + "\n";
}

std::string wrapper_to_json(const WrapperSpec& w) {
  json j{{"available", w.available},
         {"pre", w.pre},
         {"post", w.post},
         {"ancilla", w.ancilla}};
  return j.dump(2) + "\n";
}

std::string synthesis_report_json(const std::string& algorithm, int n,
                                  unsigned k_initial, const GeneratorWord& w,
                                  const std::vector<StepRecord>& steps) {
  json step_list = json::array();
  for (const StepRecord& s : steps) {
    step_list.push_back(json{{"kind", s.kind},
                             {"lde_before", s.lde_before},
                             {"lde_after", s.lde_after}});
  }
  json j{{"algorithm", algorithm},
         {"n", n},
         {"k_initial", k_initial},
         {"word_length", w.length()},
         {"ih_count", w.ih_count()},
         {"steps", std::move(step_list)}};
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace tdsynth
