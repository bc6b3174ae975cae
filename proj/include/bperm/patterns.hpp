#pragma once

// Classical (signed) and global (unsigned, on the mirror word) pattern
// containment, lazy enumeration of avoidance classes, and the construction of
// the classical basis equivalent to a set of global patterns.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bperm/core.hpp"

namespace bperm {

// Sorted, duplicate-free set of unsigned patterns.
struct GlobalPatternSet {
  std::vector<Permutation> patterns;

  GlobalPatternSet() = default;
  GlobalPatternSet(std::initializer_list<Permutation> ps) : patterns(ps) { normalize(); }
  explicit GlobalPatternSet(std::vector<Permutation> ps) : patterns(std::move(ps)) { normalize(); }

  void normalize();
  std::size_t max_size() const;
  bool empty() const { return patterns.empty(); }
  std::size_t size() const { return patterns.size(); }
  friend bool operator==(const GlobalPatternSet&, const GlobalPatternSet&) = default;
};

// Sorted (by size, then window), duplicate-free set of signed patterns.
struct SignedPatternSet {
  std::vector<SignedPermutation> patterns;

  SignedPatternSet() = default;
  SignedPatternSet(std::initializer_list<SignedPermutation> ps) : patterns(ps) { normalize(); }
  explicit SignedPatternSet(std::vector<SignedPermutation> ps) : patterns(std::move(ps)) { normalize(); }

  void normalize();
  bool empty() const { return patterns.empty(); }
  std::size_t size() const { return patterns.size(); }
  friend bool operator==(const SignedPatternSet&, const SignedPatternSet&) = default;
};

// "3,4,1,2;4,2,3,1" or "3412;4231" for unsigned, "-2,1;-1,-2" for signed.
GlobalPatternSet parse_global_patterns(std::string_view text);
SignedPatternSet parse_signed_patterns(std::string_view text);
std::string to_string(const GlobalPatternSet& set);
std::string to_string(const SignedPatternSet& set);

// Containment kernels; allocation-free.
bool word_contains(std::span<const Letter> word, std::span<const Letter> pattern);
std::uint64_t count_occurrences(std::span<const Letter> word, std::span<const Letter> pattern);

bool unsigned_contains(const Permutation& v, const Permutation& p);
bool classical_contains(const SignedPermutation& w, const SignedPermutation& q);
bool global_contains(const SignedPermutation& w, const Permutation& p);
std::uint64_t global_occurrences(const SignedPermutation& w, const Permutation& p);

bool globally_avoids(const SignedPermutation& w, const GlobalPatternSet& set);
bool classically_avoids(const SignedPermutation& w, const SignedPatternSet& set);

// Lexicographic (signed window order) walk over B_n, optionally restricted to
// elements whose first window entry equals a fixed value.
class SignedPermutationEnumerator {
 public:
  explicit SignedPermutationEnumerator(std::size_t n, std::optional<int> first = std::nullopt);

  bool next(SignedPermutation& out);

 private:
  int value_of(int candidate) const { return candidate < n_ ? candidate - n_ : candidate - n_ + 1; }
  void place(int depth, int candidate);
  void fill_from(int depth);

  int n_;
  std::optional<int> first_;
  bool started_ = false;
  bool done_ = false;
  SignedPermutation::Window window_;
  std::array<int, kMaxSignedSize> cursor_{};
  std::uint32_t used_ = 0;
};

// Lazily filtered stream of B_n.
class AvoiderStream {
 public:
  AvoiderStream(std::size_t n, std::function<bool(const SignedPermutation&)> keep,
                std::optional<int> first = std::nullopt)
      : walker_(n, first), keep_(std::move(keep)) {}

  bool next(SignedPermutation& out) {
    while (walker_.next(out)) {
      if (keep_(out)) return true;
    }
    return false;
  }

  std::vector<SignedPermutation> collect() {
    std::vector<SignedPermutation> out;
    SignedPermutation w;
    while (next(w)) out.push_back(w);
    return out;
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    SignedPermutation w;
    while (next(w)) ++total;
    return total;
  }

 private:
  SignedPermutationEnumerator walker_;
  std::function<bool(const SignedPermutation&)> keep_;
};

AvoiderStream gav(std::size_t n, GlobalPatternSet set);
AvoiderStream classical_avoiders(std::size_t n, SignedPatternSet set);
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);

// Removes window position j and re-ranks the remaining absolute values.
SignedPermutation delete_entry(const SignedPermutation& q, std::size_t j);

inline constexpr std::size_t kMaxBasisPatternSize = 8;

// Minimal antichain B with: w globally avoids `set` iff w classically avoids B.
// Ordered by size, then window.
SignedPatternSet global_basis(const GlobalPatternSet& set);

GlobalPatternSet apply_symmetry(const GlobalPatternSet& set, DihedralSymmetry s);
std::pair<std::uint64_t, std::uint64_t> symmetry_class_counts(const GlobalPatternSet& set, DihedralSymmetry s,
                                                              std::size_t n);
// One representative per {p, rc(p)} pair: the smaller of the two.
GlobalPatternSet rc_reduce(const GlobalPatternSet& set);

}  // namespace bperm
