#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "bperm/harness.hpp"

using namespace bperm;

namespace {

// Points BPERM_DATA_DIR somewhere else for the lifetime of the object.
struct DataDirOverride {
  explicit DataDirOverride(const std::filesystem::path& dir) { setenv("BPERM_DATA_DIR", dir.c_str(), 1); }
  ~DataDirOverride() { unsetenv("BPERM_DATA_DIR"); }
};

}  // namespace

TEST_CASE("registry") {
  const auto& checks = check_registry();
  std::set<std::string> ids;
  for (const auto& c : checks) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.max_n <= kMaxCheckSize);
    CHECK(static_cast<bool>(c.run));
  }
  for (const char* id : {"thm-vexillary", "thm-boolean", "thm-free", "thm-smooth-bc", "thm-central-binomial",
                         "thm-fib-like", "thm-binomial-sum", "prop-es-unsigned", "prop-es-signed", "lemma-symmetry",
                         "cor-iota", "prop-gl-basis", "conj-grassmannian", "conj-smooth-count", "oq-gao-hanni",
                         "oq-a115197", "oq-two-boolean"}) {
    CAPTURE(id);
    CHECK(find_check(id) != nullptr);
  }
  CHECK(find_check("nope") == nullptr);
}

TEST_CASE("central binomial check") {
  const auto report = run_check("thm-central-binomial", 5);
  CHECK(report.status == CheckStatus::pass);
  CHECK(report.max_n == 5);
  std::set<std::string> observed;
  for (const auto& row : report.rows) {
    CHECK(row.matches());
    observed.insert(row.observed);
  }
  bool saw_252 = false;
  for (const auto& s : observed) saw_252 = saw_252 || s.find("252") != std::string::npos;
  CHECK(saw_252);
}

TEST_CASE("theorem checks pass at small sizes") {
  for (const char* id : {"thm-vexillary", "oq-gao-hanni", "cor-iota", "prop-gl-basis", "thm-free"}) {
    CAPTURE(id);
    CHECK(run_check(id, 4).status == CheckStatus::pass);
  }
}

TEST_CASE("errors") {
  try {
    run_check("no-such-check", 2);
    FAIL("expected UnknownCheck");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_check);
  }
  try {
    run_check("thm-free", 9);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_cap_exceeded);
  }
  CHECK_THROWS_AS(run_all(9), Error);
}

TEST_CASE("max_n = 0 is a vacuous pass") {
  const auto reports = run_all(0);
  CHECK(reports.size() == check_registry().size());
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CHECK(r.rows.empty());
    CHECK((r.status == CheckStatus::pass || r.status == CheckStatus::conjecture_holds));
  }
  CHECK_FALSE(any_theorem_failed(reports));
}

TEST_CASE("filtering") {
  CHECK(run_all(2, {}, std::string("unknown-id")).empty());
  const auto one = run_all(2, {}, std::string("thm-free"));
  REQUIRE(one.size() == 1);
  CHECK(one.front().check == "thm-free");
  const auto all = run_all(1);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].check < all[i].check);
}

TEST_CASE("reports do not depend on the worker count") {
  RunOptions one, eight;
  one.jobs = 1;
  eight.jobs = 8;
  const auto a = run_all(3, one);
  const auto b = run_all(3, eight);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].same_outcome(b[i]));
}

TEST_CASE("JSON round trip") {
  for (const auto& r : run_all(2)) {
    const auto doc = to_json(r);
    CHECK(doc.at("check") == r.check);
    CHECK(doc.at("rows").is_array());
    CHECK(doc.at("millis").is_number_integer());
    CHECK(report_from_json(nlohmann::json::parse(doc.dump())) == r);
  }
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjecture_holds, CheckStatus::conjecture_fails}) {
    CHECK(parse_status(status_name(s)) == s);
  }
  CHECK(std::string(status_name(CheckStatus::conjecture_fails)) == "conjecture-fails");
}

TEST_CASE("exit status contract") {
  CheckReport theorem{"thm-free", CheckStatus::fail, 3, {{1, "a", "b"}}, 0};
  CheckReport conjecture{"oq-two-boolean", CheckStatus::conjecture_fails, 3, {{1, "a", "b"}}, 0};
  CheckReport fine{"thm-free", CheckStatus::pass, 3, {{1, "a", "a"}}, 0};
  CHECK(any_theorem_failed({theorem}));
  CHECK_FALSE(any_theorem_failed({conjecture, fine}));
  CHECK(any_theorem_failed({conjecture, theorem}));
}

TEST_CASE("failing rows explain a non-passing status") {
  for (const auto& r : run_all(4)) {
    if (r.status == CheckStatus::fail || r.status == CheckStatus::conjecture_fails) {
      CAPTURE(r.check);
      bool mismatch = false;
      for (const auto& row : r.rows) mismatch = mismatch || !row.matches();
      CHECK(mismatch);
    }
  }
}

TEST_CASE("sequence fixtures") {
  const auto dir = std::filesystem::temp_directory_path() / "bperm_fixture_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "a115197.txt");
    out << "# test terms\n1 2\n2 6\n3 22\n";
  }
  const auto terms = load_sequence_fixture(dir / "a115197.txt");
  CHECK(terms.size() == 3);
  CHECK(terms.at(3) == 22);
  {
    DataDirOverride scope(dir);
    CHECK(data_directory() == dir);
    CHECK(run_check("oq-a115197", 3).status == CheckStatus::conjecture_holds);
    // A term the counts disagree with is reported, not thrown.
    std::ofstream(dir / "a115197.txt") << "1 2\n2 7\n";
    CHECK(run_check("oq-a115197", 2).status == CheckStatus::conjecture_fails);
  }
  {
    std::ofstream(dir / "bad.txt") << "1 x y\nnot a line\n";
  }
  CHECK_THROWS_AS(load_sequence_fixture(dir / "bad.txt"), Error);
  CHECK_THROWS_AS(load_sequence_fixture(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
