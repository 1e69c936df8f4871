// Command-line frontend: enumerate | count | verify | generate | bench.
// Positions in all output are 1-based. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opsq/enumerator.hpp"
#include "opsq/genbench.hpp"
#include "opsq/oracle.hpp"
#include "opsq/sequence.hpp"

namespace {

struct InputSpec {
  std::string path;           // empty or "-" = stdin
  std::string format = "ascii";  // ascii | ints
};

std::string slurp(const InputSpec& input) {
  if (input.path.empty() || input.path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(input.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open input: " + input.path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

opsq::Sequence read_sequence(const InputSpec& input) {
  std::string text = slurp(input);
  if (input.format == "ascii") return opsq::sequence_from_ascii(text);
  if (input.format == "ints") {
    std::istringstream stream(text);
    std::vector<int64_t> raw;
    int64_t value = 0;
    while (stream >> value) {
      if (value < 1) throw std::runtime_error("ints input must be positive integers");
      raw.push_back(value);
    }
    if (!stream.eof()) throw std::runtime_error("ints input contains a non-integer token");
    if (raw.empty()) throw std::runtime_error("empty input");
    return opsq::make_sequence(raw);
  }
  throw std::runtime_error("unknown format: " + input.format);
}

void print_occurrences(const std::vector<opsq::SquareOccurrence>& occurrences,
                       const std::string& output) {
  if (output == "jsonl") {
    for (const auto& occ : occurrences) {
      nlohmann::json line = {{"start", occ.start}, {"len", occ.length}};
      std::cout << line.dump() << '\n';
    }
    return;
  }
  for (const auto& occ : occurrences) std::cout << occ.start << ' ' << occ.length << '\n';
}

int run_enumerate(const InputSpec& input, const std::string& output) {
  opsq::Sequence s = read_sequence(input);
  print_occurrences(opsq::enumerate_op_squares(s), output);
  return 0;
}

int run_count(const InputSpec& input) {
  opsq::Sequence s = read_sequence(input);
  std::vector<opsq::SquareOccurrence> occurrences = opsq::enumerate_op_squares(s);
  std::cout << "occurrences=" << occurrences.size() << '\n'
            << "distinct=" << opsq::count_distinct_as_words(occurrences, s) << '\n';
  return 0;
}

void print_counterexample(const opsq::EquivalenceResult& result) {
  std::cout << "counterexample (sigma " << result.counterexampleSigma << "):";
  for (opsq::Symbol c : result.counterexample) std::cout << ' ' << c;
  std::cout << '\n' << "expected:";
  for (const auto& occ : result.expected) std::cout << ' ' << occ.start << ':' << occ.length;
  std::cout << '\n' << "actual:";
  for (const auto& occ : result.actual) std::cout << ' ' << occ.start << ':' << occ.length;
  std::cout << '\n';
}

int run_verify(int64_t cases, int64_t maxN, int32_t maxSigma, uint64_t seed) {
  opsq::EnumerateFn fn = [](const opsq::Sequence& s) { return opsq::enumerate_op_squares(s); };
  opsq::EquivalenceResult exhaustive = opsq::exhaustive_equivalence(10, 3, fn);
  std::cout << "exhaustive n<=10 sigma<=3: " << (exhaustive.pass ? "PASS" : "FAIL") << " ("
            << exhaustive.casesRun << " cases)\n";
  if (!exhaustive.pass) {
    print_counterexample(exhaustive);
    return 1;
  }
  if (cases > 0) {
    opsq::EquivalenceResult random = opsq::random_equivalence(cases, maxN, maxSigma, seed, fn);
    std::cout << "random " << cases << " cases (n<=" << maxN << ", sigma<=" << maxSigma
              << "): " << (random.pass ? "PASS" : "FAIL") << '\n';
    if (!random.pass) {
      print_counterexample(random);
      return 1;
    }
  }
  return 0;
}

int run_generate(bool family, int32_t sigma, int64_t k, int64_t n, uint64_t seed) {
  opsq::Sequence s = family ? opsq::generate_lower_bound_family(sigma, k)
                            : opsq::generate_random(n, sigma, seed);
  std::cout << opsq::to_int_string(s) << '\n';
  return 0;
}

int run_bench(bool family, const std::vector<int64_t>& sigmas, const std::vector<int64_t>& lengths,
              uint64_t seed, const std::string& output) {
  if (output == "csv") std::cout << opsq::csv_header() << '\n';
  for (int64_t sigma : sigmas) {
    for (int64_t n : lengths) {
      opsq::Sequence s = [&] {
        if (family) {
          int64_t k = std::max<int64_t>(1, n / sigma);
          return opsq::generate_lower_bound_family(static_cast<int32_t>(sigma), k);
        }
        return opsq::generate_random(n, static_cast<int32_t>(sigma), seed);
      }();
      opsq::AuditOptions options;
      // The family's distinct-count target is only a theorem for sigma >= 2
      // (a unary block string has no op-squares at all).
      options.enforceLowerBound = family && sigma >= 2;
      opsq::BoundReport report = opsq::audit_bounds(s, options);
      std::cout << (output == "csv" ? opsq::to_csv(report) : opsq::to_jsonl(report)) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-preserving square toolkit"};
  app.require_subcommand(1);

  InputSpec input;
  std::string output = "text";

  CLI::App* cmdEnumerate = app.add_subcommand("enumerate", "list all op-square occurrences");
  cmdEnumerate->add_option("file", input.path, "input file (default: stdin)");
  cmdEnumerate->add_option("--format", input.format, "ascii | ints")->default_str("ascii");
  cmdEnumerate->add_option("--output", output, "text | jsonl")->default_str("text");

  CLI::App* cmdCount = app.add_subcommand("count", "occurrence and distinct-as-words totals");
  cmdCount->add_option("file", input.path, "input file (default: stdin)");
  cmdCount->add_option("--format", input.format, "ascii | ints")->default_str("ascii");

  int64_t cases = 1000;
  int64_t maxN = 50;
  int32_t maxSigma = 8;
  uint64_t seed = 1;
  CLI::App* cmdVerify = app.add_subcommand("verify", "compare against the brute-force reference");
  cmdVerify->add_option("--cases", cases, "random cases (0 = exhaustive suite only)");
  cmdVerify->add_option("--max-n", maxN, "max random string length");
  cmdVerify->add_option("--sigma", maxSigma, "max random alphabet size");
  cmdVerify->add_option("--seed", seed, "random seed");

  bool family = false;
  int32_t sigma = 4;
  int64_t k = 8;
  int64_t n = 64;
  CLI::App* cmdGenerate = app.add_subcommand("generate", "emit a test sequence as integers");
  cmdGenerate->add_flag("--family", family, "block family 1^k 2^k ... sigma^k");
  cmdGenerate->add_option("--sigma", sigma, "alphabet size");
  cmdGenerate->add_option("--k", k, "block length (family)");
  cmdGenerate->add_option("--n", n, "length (random)");
  cmdGenerate->add_option("--seed", seed, "random seed");

  std::vector<int64_t> sigmas{4};
  std::vector<int64_t> lengths{4096};
  std::string benchOutput = "jsonl";
  CLI::App* cmdBench = app.add_subcommand("bench", "bound-audit reports over a sweep");
  cmdBench->add_flag("--family", family, "sweep the lower-bound family instead of random input");
  cmdBench->add_option("--sigma", sigmas, "alphabet sizes");
  cmdBench->add_option("--n", lengths, "target lengths");
  cmdBench->add_option("--seed", seed, "random seed");
  cmdBench->add_option("--output", benchOutput, "jsonl | csv")->default_str("jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmdEnumerate->parsed()) return run_enumerate(input, output);
    if (cmdCount->parsed()) return run_count(input);
    if (cmdVerify->parsed()) return run_verify(cases, maxN, maxSigma, seed);
    if (cmdGenerate->parsed()) return run_generate(family, sigma, k, n, seed);
    if (cmdBench->parsed()) return run_bench(family, sigmas, lengths, seed, benchOutput);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
