#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "bperm/enumeration.hpp"
#include "bperm/tableaux.hpp"
#include "json.hpp"

using namespace bperm;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation::from(v); }

std::filesystem::path scratch_file(const char* name) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("Fibonacci-like sequences") {
  CHECK(fib_like(3, 4) == 1);
  CHECK(fib_like(3, 5) == 2);
  CHECK(fib_like(3, 6) == 3);
  for (int i = 1; i <= 10; ++i) CHECK(fib_like(1, i) == 1);
  const int fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int i = 1; i <= 9; ++i) CHECK(fib_like(2, i) == fib[i - 1]);
  for (int k = 1; k <= 10; ++k) {
    for (int i = k + 1; i <= 2 * k; ++i) {
      const int n = i - k - 1;
      const BigInt expected = n < k / 2 + 1 ? BigInt(1) << n : (BigInt(1) << n) - (BigInt(1) << (n - k / 2 - 1));
      CHECK(fib_like(k, i) == expected);
    }
  }
}

TEST_CASE("132 and a monotone pattern") {
  CHECK(count_gav_132_and_increasing(2, 2) == 3);
  CHECK(count_gav_132_and_increasing(2, 5) == 4);
  CHECK(count_gav_132_and_increasing(4, 1) == 1);
  CHECK(count_gav_132_and_decreasing(2, 2) == 2);
  CHECK(count_gav_132_and_decreasing(5, 1) == 1);
  CHECK(count_gav_132_and_decreasing(3, 4) == 6);
  CHECK_THROWS_AS(count_gav_132_and_decreasing(0, 1), Error);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const auto inc = count_gav(n, {P({1, 3, 2}), increasing_pattern(k + 1)});
      const auto dec = count_gav(n, {P({1, 3, 2}), decreasing_pattern(k + 1)});
      CHECK(count_gav_132_and_increasing(n, k) == inc);
      CHECK(count_gav_132_and_decreasing(n, k) == dec);
      CHECK(count_palindromic_compositions(2 * n, k) == inc);
      CHECK(count_palindromic_compositions(2 * n, std::nullopt, k) == dec);
    }
    CHECK(count_gav_132_and_decreasing(n, 2 * n) == BigInt(1) << n);
  }
}

TEST_CASE("palindromic compositions") {
  const auto four = palindromic_compositions(4);
  std::vector<std::vector<int>> parts;
  for (const auto& c : four) parts.push_back(c.parts);
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 2, 1}, {2, 2}, {4}});
  CHECK(palindromic_compositions(0).size() == 1);
  CHECK(palindromic_compositions(0).front().parts.empty());
  for (int total = 0; total <= 12; ++total) {
    const auto all = palindromic_compositions(total);
    CHECK(BigInt(all.size()) == count_palindromic_compositions(total));
    for (const auto& c : all) {
      CHECK(c.is_palindromic());
      CHECK(c.size() == total);
    }
  }
}

TEST_CASE("Erdos-Szekeres") {
  CHECK(es_bound(2, 2, false) == 4);
  CHECK(es_bound(2, 2, true) == 2);
  CHECK(es_bound(1, 3, true) == 1);
  CHECK(es_extremal_count(2, 2, false) == 4);
  CHECK(es_extremal_count(2, 2, true) == 4);
  CHECK(es_extremal_count(1, 3, true) == 1);
  CHECK(unsigned_avoider_count(4, {P({1, 2, 3}), P({3, 2, 1})}) == 4);
  for (int k = 1; k <= 3; ++k) {
    for (int j = 1; j <= 3; ++j) {
      const auto set = GlobalPatternSet{increasing_pattern(k + 1), decreasing_pattern(j + 1)};
      const int bound = es_bound(k, j, true);
      CHECK(count_gav(bound + 1, set) == 0);
      if (bound >= 1) CHECK(count_gav(bound, set) == es_extremal_count(k, j, true));
    }
  }
}

TEST_CASE("unsigned avoider counts") {
  CHECK(unsigned_avoider_count(3, {P({3, 4, 1, 2}), P({4, 2, 3, 1})}) == 6);
  CHECK(unsigned_avoider_count(4, {P({3, 4, 1, 2}), P({4, 2, 3, 1})}) == 22);
  CHECK(unsigned_avoider_count(5, {}) == 120);
  const std::uint64_t smooth[] = {1, 2, 6, 22, 88, 366, 1552};
  for (std::size_t m = 1; m <= 7; ++m) {
    CHECK(unsigned_avoider_count(m, {P({3, 4, 1, 2}), P({4, 2, 3, 1})}) == smooth[m - 1]);
  }
  CHECK_THROWS_AS(unsigned_avoider_count(10, {}), Error);
}

TEST_CASE("sequence tables") {
  const auto t = sequence({P({3, 2, 1})}, 1, 4);
  CHECK(to_csv(t) == "n,count\n1,2\n2,6\n3,20\n4,70\n");
  CHECK(sequence({P({2, 1, 4, 3})}, 1, 4).rows == sequence({Permutation::identity(4)}, 1, 4).rows);
  const auto ones = sequence({P({1, 2})}, 1, 3);
  for (const auto& row : ones.rows) CHECK(row.second == 1);
  CHECK_THROWS_AS(sequence({P({1, 2})}, 1, 9), Error);
  CHECK_THROWS_AS(sequence({P({1, 2})}, 3, 2), Error);

  const auto doc = nlohmann::json::parse(to_json(t));
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][3]["count"] == "70");

  const auto classical = sequence_classical(vexillary_classical(), 1, 4);
  CHECK(classical.rows == sequence({P({2, 1, 4, 3})}, 1, 4).rows);
}

TEST_CASE("parallel counting does not depend on the worker count") {
  const auto set = GlobalPatternSet{P({2, 4, 1, 3}), P({3, 1, 4, 2})};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto one = count_gav(n, set, 1);
    CHECK(count_gav(n, set, 3) == one);
    CHECK(count_gav(n, set, 8) == one);
  }
  CHECK(count_gav(6, set, 8) == 1806);
  CHECK(parallel_count(0, [](const SignedPermutation&) { return true; }, 4) == 1);
}

TEST_CASE("count cache") {
  const auto path = scratch_file("bperm_cache_test.txt");
  {
    CountCache cache(path);
    CHECK(cache.enabled());
    CHECK_FALSE(cache.lookup("321", CountMode::global, 3));
    const auto t = sequence({P({3, 2, 1})}, 1, 5, 1, &cache);
    cache.flush();
  }
  {
    CountCache cache(path);
    REQUIRE(cache.lookup("3,2,1", CountMode::global, 5));
    CHECK(*cache.lookup("3,2,1", CountMode::global, 5) == 252);
    CHECK_FALSE(cache.lookup("3,2,1", CountMode::classical, 5));
    // A cached table equals a fresh one.
    CHECK(sequence({P({3, 2, 1})}, 1, 5, 1, &cache).rows == sequence({P({3, 2, 1})}, 1, 5).rows);
  }
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line.find('|') != std::string::npos);
  std::filesystem::remove(path);
  CHECK_FALSE(CountCache().enabled());
}
