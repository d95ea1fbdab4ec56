// Command-line front end: synthesize, verify, classify, generate
// workloads, and benchmark.
//
// Exit codes: synth: 0 ok, 2 invalid input, 3 verification failure,
// 4 algorithm/dimension mismatch. verify: 0 match, 1 mismatch, 2 parse
// error. Other commands: 0 ok, 2 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "tdsynth/circuit.hpp"
#include "tdsynth/global.hpp"
#include "tdsynth/householder.hpp"
#include "tdsynth/io.hpp"
#include "tdsynth/local.hpp"

using namespace tdsynth;

namespace {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("TDSYNTH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) hw = std::min<unsigned>(hw, unsigned(v));
  }
  return int(hw);
}

// Index-ordered parallel map: results land at their index regardless of
// completion order, so output is deterministic.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int threads = std::min(thread_budget(), count > 0 ? count : 1);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(size_t(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

Ring parse_ring(const std::string& s) {
  if (s == "integral") return Ring::Integral;
  if (s == "scaled") return Ring::Scaled;
  throw DomainError("unknown ring: " + s);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

int cmd_synth(const std::string& algo, const std::string& ring_name,
              const std::string& in, const std::string& out) {
  ScaledDyadicMatrix u;
  Ring ring;
  try {
    ring = parse_ring(ring_name);
    u = matrix_from_json(read_text_file(in));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!is_orthogonal(u)) {
    std::cerr << "error: input matrix is not orthogonal\n";
    return 2;
  }
  GeneratorWord word;
  std::vector<StepRecord> steps;
  ScaledDyadicMatrix expected = u;  // what the word must evaluate to
  try {
    if (algo == "local") {
      word = synthesize_local(u, ring);
    } else if (algo == "global") {
      GlobalResult r = synthesize_global_traced(u);
      word = std::move(r.word);
      steps = std::move(r.steps);
    } else if (algo == "householder") {
      auto [w, wrapper] = synthesize_householder(u, ring);
      word = std::move(w);
      expected = embed(u).embedded;
      if (!out.empty()) {
        write_text_file(out + ".wrapper.json", wrapper_to_json(wrapper));
      }
    } else {
      std::cerr << "error: unknown algorithm: " << algo << "\n";
      return 4;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  if (evaluate_word(word) != expected) {  // never report unverified success
    std::cerr << "error: resynthesis verification failed\n";
    return 3;
  }
  emit(out, format_word(word));
  const std::string report =
      synthesis_report_json(algo, u.dim(), u.exponent(), word, steps);
  if (out.empty()) {
    std::cout << report;
  } else {
    write_text_file(out + ".report.json", report);
  }
  return 0;
}

int cmd_verify(const std::string& matrix_path, const std::string& word_path) {
  try {
    const ScaledDyadicMatrix u = matrix_from_json(read_text_file(matrix_path));
    const GeneratorWord w = parse_word(read_text_file(word_path));
    if (w.n != u.dim()) {
      std::cerr << "mismatch: word dimension " << w.n << " vs matrix "
                << u.dim() << "\n";
      return 1;
    }
    if (evaluate_word(w) != u) {
      std::cerr << "mismatch: word does not evaluate to the matrix\n";
      return 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_random(int n, unsigned k, const std::string& ring_name, uint64_t seed,
               int count, const std::string& out) {
  std::vector<std::string> results(static_cast<size_t>(count));
  try {
    const Ring ring = parse_ring(ring_name);
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;
    parallel_for(count, [&](int i) {
      if (failed.load()) return;
      try {
        auto [w, u] =
            random_matrix_with_lde(n, k, ring, seed + uint64_t(i));
        results[size_t(i)] = matrix_to_json(u);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        failed = true;
        error = e.what();
      }
    });
    if (failed) throw DomainError(error);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (int i = 0; i < count; ++i) {
    if (out.empty()) {
      std::cout << results[size_t(i)];
    } else if (count == 1) {
      write_text_file(out, results[size_t(i)]);
    } else {
      write_text_file(out + "." + std::to_string(i) + ".json",
                      results[size_t(i)]);
    }
  }
  return 0;
}

int cmd_pattern(const std::string& in, const std::string& out) {
  try {
    const ScaledDyadicMatrix u = matrix_from_json(read_text_file(in));
    const PatternId id = classify_pattern(binary_pattern(u));
    emit(out, pattern_report_json(id));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_bench(int n, const std::string& k_list, uint64_t seed, int count,
              const std::string& out) {
  std::vector<unsigned> ks;
  try {
    std::istringstream is(k_list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) continue;
      const long v = std::stol(tok);
      if (v < 0) throw DomainError("negative k in --k list");
      ks.push_back(unsigned(v));
    }
  } catch (const std::exception&) {
    std::cerr << "error: bad --k list: " << k_list << "\n";
    return 2;
  }
  std::ostringstream csv;
  csv << "algorithm,n,k,count,mean_length,max_length,runtime_ms\n";
  const bool global_ok = (n == 2 || n == 4 || n == 8);
  for (const std::string& algo :
       {std::string("local"), std::string("householder"),
        std::string("global")}) {
    if (algo == "global" && !global_ok) continue;
    for (unsigned k : ks) {
      // Householder requires an even scaled exponent.
      const unsigned kk = (algo == "householder" && k % 2 != 0) ? k + 1 : k;
      const Ring ring = (algo == "householder") ? Ring::Integral : Ring::Scaled;
      std::vector<size_t> lengths(size_t(count), 0);
      const auto t0 = std::chrono::steady_clock::now();
      std::atomic<bool> failed{false};
      parallel_for(count, [&](int i) {
        if (failed.load()) return;
        try {
          auto [w0, u] = random_matrix_with_lde(
              n, kk, ring, seed + 7919 * uint64_t(kk) + uint64_t(i));
          if (algo == "local") {
            lengths[size_t(i)] = synthesize_local(u, ring).length();
          } else if (algo == "householder") {
            lengths[size_t(i)] =
                synthesize_householder(u, ring).first.length();
          } else {
            lengths[size_t(i)] = synthesize_global(u).length();
          }
        } catch (const std::exception&) {
          failed = true;
        }
      });
      if (failed) {
        std::cerr << "error: benchmark instance failed (" << algo
                  << ", k=" << kk << ")\n";
        return 2;
      }
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      double sum = 0;
      size_t mx = 0;
      for (size_t len : lengths) {
        sum += double(len);
        mx = std::max(mx, len);
      }
      const double mean = count > 0 ? sum / count : 0.0;
      csv << algo << "," << n << "," << kk << "," << count << "," << mean
          << "," << mx << "," << long(ms) << "\n";
    }
  }
  try {
    emit(out, csv.str());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_relations_check() {
  try {
    const std::size_t count = check_rewrite_rules(8);
    std::cout << "ok: " << count
              << " rewrite-rule instances verified at n=8\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact synthesis of scaled dyadic orthogonal matrices"};
  app.require_subcommand(1);

  std::string algo = "local", ring = "scaled", in, out, word_file, k_list;
  uint64_t seed = 0;
  int count = 1, n = 8;
  unsigned k = 0;

  auto* synth = app.add_subcommand("synth", "Factor a matrix into a word");
  synth->add_option("--algo", algo, "local | householder | global");
  synth->add_option("--ring", ring, "integral | scaled");
  synth->add_option("--in", in, "input matrix JSON")->required();
  synth->add_option("--out", out, "output word file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check a word against a matrix");
  verify->add_option("--in", in, "matrix JSON")->required();
  verify->add_option("word", word_file, "word text file")->required();

  auto* random = app.add_subcommand("random", "Generate random instances");
  random->add_option("--n", n, "dimension");
  random->add_option("--k", k, "target scaled exponent");
  random->add_option("--ring", ring, "integral | scaled");
  random->add_option("--seed", seed, "random seed");
  random->add_option("--count", count, "number of instances");
  random->add_option("--out", out, "output path (stdout if omitted)");

  auto* pattern = app.add_subcommand("pattern", "Classify a binary pattern");
  pattern->add_option("--in", in, "matrix JSON")->required();
  pattern->add_option("--out", out, "report path (stdout if omitted)");

  auto* bench = app.add_subcommand("bench", "Word-length benchmark sweep");
  bench->add_option("--n", n, "dimension");
  bench->add_option("--k", k_list, "comma-separated exponent list")
      ->required();
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--count", count, "instances per cell");
  bench->add_option("--out", out, "CSV path (stdout if omitted)");

  app.add_subcommand("relations-check",
                     "Verify the commutation relations at n=8");

  CLI11_PARSE(app, argc, argv);

  if (synth->parsed()) return cmd_synth(algo, ring, in, out);
  if (verify->parsed()) return cmd_verify(in, word_file);
  if (random->parsed()) return cmd_random(n, k, ring, seed, count, out);
  if (pattern->parsed()) return cmd_pattern(in, out);
  if (bench->parsed()) return cmd_bench(n, k_list, seed, count, out);
  return cmd_relations_check();
}
