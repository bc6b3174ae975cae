#pragma once

// Registry of exhaustive checks. Theorem checks report pass/fail; conjecture
// and open-question checks report conjecture-holds/conjecture-fails and never
// make the process fail.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bperm/bigint.hpp"
#include "bperm/error.hpp"

namespace bperm {

inline constexpr int kMaxCheckSize = 8;

enum class CheckKind { theorem, conjecture };
enum class CheckStatus { pass, fail, conjecture_holds, conjecture_fails };

const char* status_name(CheckStatus s);
CheckStatus parse_status(std::string_view name);

struct DetailRow {
  int n = 0;
  std::string expected;
  std::string observed;

  bool matches() const { return expected == observed; }
  friend bool operator==(const DetailRow&, const DetailRow&) = default;
};

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  int max_n = 0;
  std::vector<DetailRow> rows;
  std::int64_t millis = 0;

  // Equality ignoring wall time.
  bool same_outcome(const CheckReport& other) const;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct RunOptions {
  unsigned jobs = 1;
};

struct Check {
  std::string id;
  int max_n = 0;  // largest n this check will run; requests above are clamped
  std::string description;
  CheckKind kind = CheckKind::theorem;
  std::function<std::vector<DetailRow>(int max_n, const RunOptions&)> run;
};

const std::vector<Check>& check_registry();
const Check* find_check(std::string_view id);

// Throws UnknownCheck, SizeCapExceeded (max_n > 8).
CheckReport run_check(std::string_view id, int max_n, const RunOptions& options = {});
// All registered checks (or the one matching `only`; unknown ids give an
// empty list), ordered by id.
std::vector<CheckReport> run_all(int max_n, const RunOptions& options = {},
                                 std::optional<std::string> only = std::nullopt);
bool any_theorem_failed(const std::vector<CheckReport>& reports);

nlohmann::json to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& doc);

// Reference terms for sequence checks: '#' comment lines, then "n value".
std::map<int, BigInt> load_sequence_fixture(const std::filesystem::path& path);
// $BPERM_DATA_DIR, else the directory configured at build time.
std::filesystem::path data_directory();

}  // namespace bperm
