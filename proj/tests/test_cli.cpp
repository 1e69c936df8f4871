// End-to-end checks of the opsq command-line tool. Run with the binary path
// as the only argument; each check prints its own verdict and the process
// exits nonzero if any fails.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string gBinary;
int gFailures = 0;

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdinText = "") {
  std::string cmd;
  if (!stdinText.empty()) {
    // Feed stdin through printf to stay shell-portable.
    std::string escaped;
    for (char c : stdinText) {
      if (c == '\'' ) escaped += "'\\''";
      else escaped += c;
    }
    cmd = "printf '%s' '" + escaped + "' | " + gBinary + " " + args + " 2>&1";
  } else {
    // Explicit empty stdin so the tool never blocks on an open descriptor.
    cmd = gBinary + " " + args + " < /dev/null 2>&1";
  }
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    r.out = "<popen failed>";
    return r;
  }
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what, const RunResult& r) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++gFailures;
    std::cout << "FAIL: " << what << "\n  exit=" << r.exitCode << "\n  output:\n" << r.out << "\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-opsq>\n";
    return 2;
  }
  gBinary = argv[1];

  {
    RunResult r = run("enumerate", "1122");
    expect(r.exitCode == 0 && r.out == "1 4\n2 2\n", "enumerate reads stdin and prints start/length pairs", r);
  }
  {
    RunResult r = run("enumerate --output jsonl", "1122");
    expect(r.exitCode == 0 &&
               contains(r.out, "{\"len\":4,\"start\":1}") &&
               contains(r.out, "{\"len\":2,\"start\":2}"),
           "enumerate emits one JSON object per occurrence", r);
  }
  {
    RunResult r = run("enumerate", "1111");
    expect(r.exitCode == 0 && r.out.empty(), "enumerate prints nothing for a constant string", r);
  }
  {
    RunResult r = run("count", "1212");
    expect(r.exitCode == 0 && r.out == "occurrences=3\ndistinct=2\n", "count reports both totals", r);
  }
  {
    RunResult r = run("generate --family --sigma 3 --k 2");
    expect(r.exitCode == 0 && r.out == "1 1 2 2 3 3\n", "generate prints the block family as integers", r);
  }
  {
    RunResult r = run("generate --family --sigma 2 --k 3");
    RunResult e = run("enumerate --format ints", r.out);
    expect(r.exitCode == 0 && e.exitCode == 0 && e.out == "1 6\n2 4\n3 2\n",
           "generate | enumerate --format ints round-trips", r.exitCode != 0 ? r : e);
  }
  {
    RunResult a = run("enumerate --format ints", "2 1 3 1 2");
    RunResult b = run("enumerate --format ints", "2 1 3 1 2");
    expect(a.exitCode == 0 && a.out == b.out, "enumerate is deterministic across runs", a);
  }
  {
    RunResult r = run("verify --cases 50 --max-n 20 --sigma 4 --seed 5");
    expect(r.exitCode == 0 && contains(r.out, "exhaustive n<=10 sigma<=3: PASS") &&
               contains(r.out, "random 50 cases (n<=20, sigma<=4): PASS"),
           "verify runs the exhaustive and random suites", r);
  }
  {
    RunResult r = run("bench --n 256 --sigma 3 --output csv --seed 2");
    std::istringstream lines(r.out);
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    expect(r.exitCode == 0 &&
               header == "n,sigma,distinct,occurrences,candidates,maxPerSuffix,t_build_ms,t_enum_ms" &&
               row.rfind("256,3,", 0) == 0,
           "bench emits a csv header and one row per configuration", r);
  }
  {
    RunResult r = run("bench --family --n 240 --sigma 4 --output jsonl");
    expect(r.exitCode == 0 && contains(r.out, "\"n\":240") && contains(r.out, "\"sigma\":4") &&
               contains(r.out, "\"t_enum_ms\":"),
           "bench family mode emits jsonl", r);
  }
  {
    RunResult r = run("enumerate --format ints", "1 2 0 3");
    expect(r.exitCode == 2 && contains(r.out, "error:"), "non-positive integers are rejected", r);
  }
  {
    RunResult r = run("enumerate --format ints", "1 2 x 3");
    expect(r.exitCode == 2 && contains(r.out, "error:"), "non-integer tokens are rejected", r);
  }
  {
    RunResult r = run("enumerate", "");
    expect(r.exitCode == 2 && contains(r.out, "error:"), "empty input is rejected", r);
  }
  {
    RunResult r = run("--no-such-flag");
    expect(r.exitCode == 2, "unknown flags exit with code 2", r);
  }
  {
    RunResult r = run("");
    expect(r.exitCode == 2, "a missing subcommand exits with code 2", r);
  }
  {
    RunResult r = run("generate --family --sigma 0 --k 2");
    expect(r.exitCode == 2 && contains(r.out, "error:"), "generate rejects sigma 0", r);
  }

  if (gFailures != 0) {
    std::cout << gFailures << " cli check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
