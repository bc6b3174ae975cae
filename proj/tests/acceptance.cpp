// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Criteria 1-10 decide the exit status; criterion 11 monitors conjectures and
// open questions and is reported without affecting it.

#include <cstdio>
#include <string>
#include <vector>

#include "bperm/enumeration.hpp"
#include "bperm/harness.hpp"

using namespace bperm;

namespace {

struct Run {
  const char* check;
  int max_n;
};

struct Criterion {
  int number;
  const char* title;
  std::vector<Run> runs;
  // Extra literal comparisons; each returns "" on success or a message.
  std::vector<std::string (*)()> literals;
  bool monitoring = false;
};

std::string expect_counts(const char* what, const GlobalPatternSet& set, const std::vector<std::uint64_t>& values) {
  for (std::size_t n = 1; n <= values.size(); ++n) {
    const auto got = count_gav(n, set);
    if (got != values[n - 1]) {
      return std::string(what) + " n=" + std::to_string(n) + ": expected " + std::to_string(values[n - 1]) +
             ", got " + std::to_string(got);
    }
  }
  return "";
}

std::string central_binomial_values() {
  const std::vector<std::uint64_t> values = {2, 6, 20, 70, 252, 924, 3432};
  auto msg = expect_counts("GAV(321)", {Permutation::from({3, 2, 1})}, values);
  if (msg.empty()) msg = expect_counts("GAV(123)", {Permutation::from({1, 2, 3})}, values);
  return msg;
}

std::string fibonacci_column() {
  return expect_counts("GAV(132,123)", {Permutation::from({1, 3, 2}), Permutation::from({1, 2, 3})},
                       {2, 3, 5, 8, 13, 21});
}

std::string powers_of_two() {
  return expect_counts("GAV(132)", {Permutation::from({1, 3, 2})}, {2, 4, 8, 16, 32, 64});
}

bool is_success(CheckStatus s) { return s == CheckStatus::pass || s == CheckStatus::conjecture_holds; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vexillary persistence, n <= 5", {{"thm-vexillary", 5}}, {}},
      {2, "boolean persistence, n <= 4", {{"thm-boolean", 4}}, {}},
      {3, "free persistence, n <= 5", {{"thm-free", 5}}, {}},
      {4, "smooth in types B and C, n <= 5, with witnesses", {{"thm-smooth-bc", 5}}, {}},
      {5, "central binomial counts n <= 7, two-row domino counts n <= 5", {{"thm-central-binomial", 7}},
       {central_binomial_values}},
      {6, "monotone patterns vs squared domino counts, n <= 4", {{"thm-greene-domino", 4}}, {}},
      {7, "Fibonacci-like counts, n <= 6, k <= 4", {{"thm-fib-like", 6}}, {fibonacci_column}},
      {8, "binomial-sum counts, n <= 6, k <= 5", {{"thm-binomial-sum", 6}}, {powers_of_two}},
      {9, "Erdos-Szekeres bounds and extremal counts, kj <= 6", {{"prop-es-unsigned", 6}, {"prop-es-signed", 6}}, {}},
      {10, "iota, symmetries, rc reduction, global bases, n <= 4",
       {{"cor-iota", 4}, {"lemma-symmetry", 4}, {"prop-gl-basis", 4}}, {}},
      {11, "conjecture monitoring (informational)",
       {{"conj-grassmannian", 5}, {"conj-smooth-count", 5}, {"oq-gao-hanni", 6}, {"oq-a115197", 5}}, {}, true},
  };

  bool build_breaking_failure = false;
  for (const auto& c : criteria) {
    std::vector<std::string> notes;
    bool ok = true;
    for (const auto& run : c.runs) {
      try {
        const auto report = run_check(run.check, run.max_n);
        if (!is_success(report.status)) {
          ok = false;
          notes.push_back(std::string(run.check) + ": " + status_name(report.status));
          for (const auto& row : report.rows) {
            if (!row.matches()) {
              notes.push_back("  n=" + std::to_string(row.n) + " expected [" + row.expected + "] observed [" +
                              row.observed + "]");
            }
          }
        }
      } catch (const std::exception& e) {
        ok = false;
        notes.push_back(std::string(run.check) + ": error: " + e.what());
      }
    }
    for (auto literal : c.literals) {
      const std::string msg = literal();
      if (!msg.empty()) {
        ok = false;
        notes.push_back(msg);
      }
    }
    std::printf("criterion %2d %s %s\n", c.number, ok ? "PASS" : "FAIL", c.title);
    for (const auto& note : notes) std::printf("    %s\n", note.c_str());
    if (!ok && !c.monitoring) build_breaking_failure = true;
  }
  return build_breaking_failure ? 1 : 0;
}
