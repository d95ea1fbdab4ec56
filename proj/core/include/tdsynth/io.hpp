#pragma once

#include <string>

#include "tdsynth/global.hpp"
#include "tdsynth/householder.hpp"
#include "tdsynth/pattern.hpp"

namespace tdsynth {

// Matrix JSON: {"n": <int>, "k": <int>, "entries": [[...],...]} meaning
// M / sqrt(2)^k. Entries that fit in int64 are plain JSON numbers; larger
// ones are decimal strings, and the reader accepts either. The reader
// normalizes; the writer emits canonical form.
std::string matrix_to_json(const ScaledDyadicMatrix& u);
ScaledDyadicMatrix matrix_from_json(const std::string& text);

// {"label": ..., "transposed": ..., "row_perm": [...], "col_perm": [...]}
std::string pattern_report_json(const PatternId& id);

// {"pre": [...], "post": [...], "ancilla": "msb", "available": ...}
std::string wrapper_to_json(const WrapperSpec& w);

// {"algorithm": ..., "n": ..., "k_initial": ..., "word_length": ...,
//  "ih_count": ..., "steps": [{"kind", "lde_before", "lde_after"}, ...]}
// `steps` is omitted for step-free algorithms (empty vector -> []).
std::string synthesis_report_json(const std::string& algorithm, int n,
                                  unsigned k_initial, const GeneratorWord& w,
                                  const std::vector<StepRecord>& steps);

// Whole-file helpers; throw ParseError on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tdsynth
