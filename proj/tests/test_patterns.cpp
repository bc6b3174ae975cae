#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "bperm/classes.hpp"
#include "bperm/patterns.hpp"

using namespace bperm;

namespace {

SignedPermutation S(std::initializer_list<int> w) { return SignedPermutation::from(w); }
Permutation P(std::initializer_list<int> v) { return Permutation::from(v); }

std::vector<std::string> windows(std::vector<SignedPermutation> ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Subset-mask containment: standardize every subsequence of the right length.
bool naive_word_contains(std::span<const Letter> word, const Permutation& p) {
  const std::size_t m = p.size(), n = word.size();
  if (m > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    FixedVector<Letter, kMaxPermutationSize> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(word[i]);
    }
    if (standardize(sub.span()) == p) return true;
  }
  return false;
}

bool naive_classical(const SignedPermutation& w, const SignedPermutation& q) {
  const std::size_t m = q.size(), n = w.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(w.window()[i]);
    }
    std::vector<int> abs_sorted;
    for (int x : sub) abs_sorted.push_back(std::abs(x));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      const int rank = static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(), std::abs(sub[i])) -
                                        abs_sorted.begin()) +
                       1;
      ok = (sub[i] < 0 ? -rank : rank) == q.window()[i];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pattern set grammar") {
  const auto g = parse_global_patterns("3412;4231");
  CHECK(g.size() == 2);
  CHECK(to_string(g) == "3,4,1,2;4,2,3,1");
  CHECK(parse_global_patterns("4231;3412;3412") == g);
  const auto s = parse_signed_patterns("-2,1;-1,-2");
  CHECK(s.size() == 2);
  CHECK(parse_signed_patterns("") .empty());
  CHECK_THROWS_AS(parse_global_patterns("12;1x"), Error);
  try {
    parse_signed_patterns("1,1");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("unsigned containment") {
  CHECK(unsigned_contains(P({4, 2, 3, 1}), P({3, 2, 1})));
  CHECK_FALSE(unsigned_contains(P({3, 4, 1, 2}), P({3, 2, 1})));
  for (const auto& v : all_permutations(5)) CHECK(unsigned_contains(v, v));
  for (const auto& v : all_permutations(6)) {
    for (const auto& p : all_permutations(3)) {
      CHECK(unsigned_contains(v, p) == naive_word_contains(v.word(), p));
    }
  }
}

TEST_CASE("classical containment") {
  CHECK(classical_contains(S({-2, 1, 3, -4}), S({-1, -2})));
  CHECK(classical_contains(S({-2, 1, 3, -4}), S({1, -2})));
  CHECK_FALSE(classical_contains(S({1, 2, 3}), S({-1})));
  const auto b3 = all_signed_permutations(3);
  for (const auto& w : all_signed_permutations(4)) {
    for (const auto& q : b3) CHECK(classical_contains(w, q) == naive_classical(w, q));
    CHECK(classical_contains(w, S({-1})) == naive_classical(w, S({-1})));
  }
}

TEST_CASE("global containment") {
  const auto w = S({-2, 1, 3, -4});
  for (const auto& p : all_permutations(3)) CHECK(global_contains(w, p));
  CHECK_FALSE(global_contains(w, P({2, 1, 4, 3})));
  CHECK(global_contains(S({1}), P({1, 2})));
  for (const auto& u : all_signed_permutations(3)) {
    for (const auto& p : all_permutations(4)) {
      CHECK(global_contains(u, p) == naive_word_contains(mirror_word(u).span(), p));
    }
  }
  CHECK(global_occurrences(S({-1, -2}), P({2, 1})) == 6);
  CHECK(global_occurrences(SignedPermutation::identity(3), P({1, 2})) == 15);
}

TEST_CASE("global avoidance classes") {
  CHECK(windows(gav(2, {P({1, 3, 2})}).collect()) ==
        std::vector<std::string>{"-1,-2", "-2,-1", "1,-2", "1,2"});
  CHECK(gav(3, {P({3, 2, 1})}).count() == 20);
  CHECK(gav(1, {P({1, 2}), P({2, 1})}).count() == 0);
  CHECK(windows(gav(2, {P({1, 3, 2}), P({1, 2, 3})}).collect()) ==
        std::vector<std::string>{"-1,-2", "-2,-1", "1,-2"});
  CHECK(windows(gav(2, {P({1, 3, 2}), P({3, 2, 1})}).collect()) == std::vector<std::string>{"-2,-1", "1,2"});
  CHECK(gav(3, {P({1, 3, 2}), P({4, 3, 2, 1})}).count() == 4);

  // Frozen from an independent brute-force enumeration.
  struct Row {
    const char* patterns;
    std::vector<std::uint64_t> counts;
  };
  const std::vector<Row> table = {
      {"321", {2, 6, 20, 70, 252}},
      {"2143", {2, 7, 33, 183, 1118}},
      {"1234", {2, 7, 33, 183, 1118}},
      {"3412;4231", {2, 6, 22, 88, 366}},
      {"2413;3142", {2, 6, 22, 90, 394}},
      {"231;312;321", {2, 3, 5, 8, 13}},
      {"321;3412", {2, 5, 13, 34, 89}},
  };
  for (const auto& row : table) {
    const auto set = parse_global_patterns(row.patterns);
    for (std::size_t n = 1; n <= row.counts.size(); ++n) {
      CAPTURE(row.patterns);
      CAPTURE(n);
      CHECK(gav(n, set).count() == row.counts[n - 1]);
    }
  }
}

TEST_CASE("classical avoidance classes") {
  CHECK(windows(classical_avoiders(1, {S({-1})}).collect()) == std::vector<std::string>{"1"});
  CHECK(classical_avoiders(3, {}).count() == 48);
  CHECK(classical_avoiders(4, vexillary_classical()).count() == gav(4, {P({2, 1, 4, 3})}).count());
}

TEST_CASE("enumeration order") {
  const auto all = all_signed_permutations(3);
  CHECK(all.size() == 48);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  // Branches by first entry concatenate to the full order.
  std::vector<SignedPermutation> joined;
  for (int first : {-3, -2, -1, 1, 2, 3}) {
    SignedPermutationEnumerator walker(3, first);
    SignedPermutation w;
    while (walker.next(w)) {
      CHECK(w.window()[0] == first);
      joined.push_back(w);
    }
  }
  CHECK(joined == all);
  CHECK(all_signed_permutations(0).size() == 1);
}

TEST_CASE("delete_entry") {
  CHECK(delete_entry(S({-2, 1, 3, -4}), 0) == S({1, 2, -3}));
  CHECK(delete_entry(S({-2, 1, 3, -4}), 3) == S({-2, 1, 3}));
}

TEST_CASE("global bases of the featured sets") {
  CHECK(global_basis({P({2, 1, 4, 3})}) == vexillary_classical());
  CHECK(global_basis(boolean_global()) == boolean_classical());
  CHECK(global_basis(free_global()) == free_classical());
  CHECK(global_basis(smooth_bc_global()) == smooth_bc_classical());
  CHECK(global_basis({P({2, 1, 4, 3})}).size() == 9);
  CHECK_THROWS_AS(global_basis({Permutation::identity(9)}), Error);
}

TEST_CASE("global basis is an antichain that reproduces the class") {
  const std::vector<const char*> sets = {"12", "21", "132", "123;132", "2413", "3412", "321;4123", "1234"};
  for (const char* text : sets) {
    CAPTURE(text);
    const auto set = parse_global_patterns(text);
    const auto basis = global_basis(set);
    for (const auto& a : basis.patterns) {
      for (const auto& b : basis.patterns) {
        if (!(a == b)) CHECK_FALSE(classical_contains(b, a));
      }
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(gav(n, set).collect() == classical_avoiders(n, basis).collect());
    }
  }
}

TEST_CASE("symmetries of global classes") {
  const auto c = symmetry_class_counts({P({1, 3, 2})}, DihedralSymmetry::reverse(), 3);
  CHECK(c.first == c.second);
  const auto d = symmetry_class_counts({P({1, 2})}, DihedralSymmetry::complement(), 2);
  CHECK(d.first == 1);
  CHECK(d.second == 1);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(gav(n, {P({1, 2, 3})}).collect() ==
          gav(n, apply_symmetry(GlobalPatternSet{P({1, 2, 3})}, DihedralSymmetry::reverse_complement())).collect());
    CHECK(gav(n, {P({2, 3, 1})}).collect() == gav(n, {P({2, 3, 1}), P({3, 1, 2})}).collect());
  }
  CHECK(rc_reduce({P({2, 3, 1}), P({3, 1, 2})}) == GlobalPatternSet{P({2, 3, 1})});
  CHECK(rc_reduce({P({3, 2, 1})}) == GlobalPatternSet{P({3, 2, 1})});
  CHECK(rc_reduce({P({1, 3, 2}), P({2, 1, 3}), P({3, 2, 1})}) == GlobalPatternSet{P({1, 3, 2}), P({3, 2, 1})});
  for (auto s : DihedralSymmetry::all()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto counts = symmetry_class_counts({P({2, 4, 1, 3})}, s, n);
      CHECK(counts.first == counts.second);
    }
  }
}
