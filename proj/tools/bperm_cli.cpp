// Command-line front end. Talks to the library only through bperm.h.

#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bperm/bperm.h"

namespace {

constexpr int kUsageError = 2;

struct Failure {
  bperm_status status;
};

void check(bperm_status status) {
  if (status != BPERM_OK) throw Failure{status};
}

std::string take(char* text) {
  std::string out = text ? text : "";
  bperm_string_free(text);
  return out;
}

void print_lines(bperm_strings* list) {
  for (size_t i = 0; i < bperm_strings_size(list); ++i) std::cout << bperm_strings_at(list, i) << '\n';
  bperm_strings_free(list);
}

// "A..B" or a single "N".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected N or A..B, got '" + text + "'");
  }
}

bperm_mode parse_mode(const std::string& text) {
  return text == "classical" ? BPERM_MODE_CLASSICAL : BPERM_MODE_GLOBAL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed permutation patterns, classes, tableaux and verification checks"};
  app.require_subcommand(1);

  std::string patterns, mode = "global", range, format = "csv", property, shape, check_id, pattern, window;
  int n = 0, max_n = 4;
  unsigned jobs = 1;
  bool use_cache = false, domino = false, list_tableaux = false;

  auto add_count_options = [&](CLI::App* cmd) {
    cmd->add_option("--patterns", patterns, "pattern set, e.g. 3412;4231")->required();
    cmd->add_option("--mode", mode, "global or classical")->check(CLI::IsMember({"global", "classical"}));
    cmd->add_option("--n", range, "N or A..B")->required();
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--cache", use_cache, "use the count cache named by BPERM_CACHE");
  };
  auto* count = app.add_subcommand("count", "count avoiders for each n in a range");
  add_count_options(count);
  auto* sequence = app.add_subcommand("sequence", "same as count");
  add_count_options(sequence);

  auto* list = app.add_subcommand("list", "list elements of B_n with a property or avoiding patterns");
  list->add_option("--property", property, "vexillary, boolean, free, smooth-b, smooth-c, smooth-bc, ...");
  list->add_option("--patterns", patterns, "pattern set (instead of --property)");
  list->add_option("--mode", mode, "global or classical")->check(CLI::IsMember({"global", "classical"}));
  list->add_option("--n", n, "size")->required();

  auto* basis = app.add_subcommand("basis", "classical basis of a global pattern set");
  basis->add_option("--patterns", patterns, "unsigned pattern set")->required();

  auto* tableaux = app.add_subcommand("tableaux", "standard or domino tableau counts for a shape");
  tableaux->add_option("--shape", shape, "partition, e.g. 4,2")->required();
  tableaux->add_flag("--domino", domino, "count domino tableaux");
  tableaux->add_flag("--list", list_tableaux, "print every domino tableau");

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--check", check_id, "single check id");
  verify->add_option("--max-n", max_n, "largest n (each check also has its own cap)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* occurrences = app.add_subcommand("occurrences", "global occurrences of an unsigned pattern");
  occurrences->add_option("--pattern", pattern, "unsigned pattern")->required();
  auto* window_opt = occurrences->add_option("--window", window, "one signed permutation");
  occurrences->add_option("--n", n, "distribution over all of B_n")->excludes(window_opt);

  auto* checks = app.add_subcommand("checks", "list registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (count->parsed() || sequence->parsed()) {
      const auto [lo, hi] = parse_range(range);
      bperm_table* table = nullptr;
      check(bperm_sequence(patterns.c_str(), parse_mode(mode), lo, hi, jobs, use_cache ? 1 : 0, &table));
      char* text = nullptr;
      const bperm_status st = format == "json" ? bperm_table_json(table, &text) : bperm_table_csv(table, &text);
      bperm_table_free(table);
      check(st);
      std::cout << take(text);
    } else if (list->parsed()) {
      if (property.empty() == patterns.empty()) {
        std::cerr << "list: give exactly one of --property and --patterns\n";
        return kUsageError;
      }
      bperm_strings* out = nullptr;
      if (!property.empty()) {
        check(bperm_list_property(property.c_str(), n, &out));
      } else {
        check(bperm_list_avoiders(patterns.c_str(), parse_mode(mode), n, &out));
      }
      print_lines(out);
    } else if (basis->parsed()) {
      bperm_strings* out = nullptr;
      check(bperm_basis(patterns.c_str(), &out));
      print_lines(out);
    } else if (tableaux->parsed()) {
      if (list_tableaux) {
        bperm_strings* out = nullptr;
        check(bperm_domino_tableaux(shape.c_str(), &out));
        for (size_t i = 0; i < bperm_strings_size(out); ++i) {
          if (i > 0) std::cout << '\n';
          std::cout << bperm_strings_at(out, i) << '\n';
        }
        bperm_strings_free(out);
      } else {
        char* text = nullptr;
        check(domino ? bperm_domino_count(shape.c_str(), &text) : bperm_syt_count(shape.c_str(), &text));
        std::cout << take(text) << '\n';
      }
    } else if (verify->parsed()) {
      bperm_reports* reports = nullptr;
      check(bperm_verify(check_id.empty() ? nullptr : check_id.c_str(), max_n, jobs, &reports));
      char* text = nullptr;
      const bperm_status st =
          verify_format == "json" ? bperm_reports_json(reports, &text) : bperm_reports_text(reports, &text);
      const int failed = bperm_reports_any_theorem_failed(reports);
      bperm_reports_free(reports);
      check(st);
      std::cout << take(text);
      return failed ? 1 : 0;
    } else if (occurrences->parsed()) {
      if (!window.empty()) {
        bperm_signed* w = nullptr;
        check(bperm_signed_parse(window.c_str(), &w));
        uint64_t k = 0;
        const bperm_status st = bperm_signed_global_occurrences(w, pattern.c_str(), &k);
        bperm_signed_free(w);
        check(st);
        std::cout << k << '\n';
      } else {
        bperm_strings* out = nullptr;
        check(bperm_occurrence_distribution(pattern.c_str(), n, &out));
        std::cout << "k,count\n";
        print_lines(out);
      }
    } else if (checks->parsed()) {
      bperm_strings* out = nullptr;
      check(bperm_list_checks(&out));
      print_lines(out);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << bperm_status_name(f.status) << ": " << bperm_last_error() << '\n';
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
