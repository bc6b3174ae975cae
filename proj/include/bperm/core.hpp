#pragma once

// Signed permutations (the hyperoctahedral group B_n), unsigned permutations,
// the mirror/iota embedding into S_{2n}, dihedral symmetries of permutation
// graphs and the type-B Coxeter structure (generators, lengths, reduced words).
//
// Conventions:
//   * s_0 negates the first window entry, s_i (i >= 1) swaps positions i, i+1;
//     generators act on the right, so w * s_i permutes positions of w.
//   * A reduced word (a_1, ..., a_k) denotes w = s_{a_1} s_{a_2} ... s_{a_k}:
//     starting from the identity, apply_generator with a_1, then a_2, ...
//   * Descents use w(0) = 0, so 0 is a descent iff w(1) < 0. This makes 1 -2
//     have the single descent 1 (it is Grassmannian).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bperm/error.hpp"
#include "bperm/fixed_vector.hpp"

namespace bperm {

inline constexpr std::size_t kMaxSignedSize = 16;
inline constexpr std::size_t kMaxPermutationSize = 2 * kMaxSignedSize;

using Letter = std::int8_t;
using Word = FixedVector<Letter, kMaxPermutationSize>;

// One-line word of a permutation of {1, ..., m}.
class Permutation {
 public:
  Permutation() = default;

  static Permutation from(std::span<const int> oneline);
  static Permutation from(std::initializer_list<int> oneline) {
    return from(std::span<const int>(oneline.begin(), oneline.size()));
  }
  static Permutation identity(std::size_t m);

  std::size_t size() const { return word_.size(); }
  // 0-based access: operator[](i) is v(i + 1).
  int operator[](std::size_t i) const { return word_[i]; }
  std::span<const Letter> word() const { return word_.span(); }
  std::vector<int> values() const { return {word_.begin(), word_.end()}; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.word_ <=> b.word_;
  }

 private:
  friend Permutation standardize(std::span<const Letter> word);
  Word word_;
};

// Window w(1) ... w(n) of a signed permutation; w(-x) = -w(x) is implied.
class SignedPermutation {
 public:
  using Window = FixedVector<Letter, kMaxSignedSize>;

  SignedPermutation() = default;

  static SignedPermutation from(std::span<const int> window);
  static SignedPermutation from(std::initializer_list<int> window) {
    return from(std::span<const int>(window.begin(), window.size()));
  }
  static SignedPermutation identity(std::size_t n);
  // Skips validation; the caller guarantees a valid window.
  static SignedPermutation from_trusted(const Window& window) {
    SignedPermutation w;
    w.window_ = window;
    return w;
  }

  std::size_t size() const { return window_.size(); }
  // 0-based window access: operator[](i) is w(i + 1).
  int operator[](std::size_t i) const { return window_[i]; }
  // The full map on [-n, n] \ {0}, plus w(0) = 0.
  int at(int x) const {
    if (x == 0) return 0;
    return x > 0 ? window_[static_cast<std::size_t>(x - 1)] : -window_[static_cast<std::size_t>(-x - 1)];
  }
  std::span<const Letter> window() const { return window_.span(); }
  const Window& raw() const { return window_; }
  std::vector<int> values() const { return {window_.begin(), window_.end()}; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  // Size first, then lexicographic on signed window values.
  friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.window_ <=> b.window_;
  }

 private:
  Window window_;
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const noexcept;
};

// Small set of generator indices in [0, 31].
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  constexpr void insert(int i) { bits_ |= (std::uint32_t{1} << i); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<int> to_vector() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct ReducedWord {
  std::vector<std::uint8_t> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

// Element of the dihedral group of the square acting on permutation graphs.
// Stored as the action on centred coordinates (x, y): optional transpose
// (inverse) followed by optional negation of x (reverse) and of y (complement).
class DihedralSymmetry {
 public:
  constexpr DihedralSymmetry() = default;

  static constexpr DihedralSymmetry identity() { return {false, false, false}; }
  static constexpr DihedralSymmetry reverse() { return {false, true, false}; }
  static constexpr DihedralSymmetry complement() { return {false, false, true}; }
  static constexpr DihedralSymmetry inverse() { return {true, false, false}; }
  static constexpr DihedralSymmetry reverse_complement() { return {false, true, true}; }
  static std::vector<DihedralSymmetry> all();

  // (a * b) applies b first, then a.
  friend DihedralSymmetry operator*(DihedralSymmetry a, DihedralSymmetry b);
  friend constexpr bool operator==(DihedralSymmetry, DihedralSymmetry) = default;

  bool transposes() const { return transpose_; }
  bool negates_x() const { return flip_x_; }
  bool negates_y() const { return flip_y_; }
  std::string name() const;

 private:
  constexpr DihedralSymmetry(bool t, bool fx, bool fy) : transpose_(t), flip_x_(fx), flip_y_(fy) {}
  bool transpose_ = false;
  bool flip_x_ = false;
  bool flip_y_ = false;
};

// Text grammar shared with the CLI: "-2,1,3,-4". A token without commas is
// read one digit per entry ("2143", "1-2"), so only sizes up to 9 fit there.
SignedPermutation parse_signed(std::string_view text);
Permutation parse_permutation(std::string_view text);
std::string to_string(const SignedPermutation& w);
std::string to_string(const Permutation& v);

// Rank of each entry among the entries of the word (order-isomorphic image).
Permutation standardize(std::span<const Letter> word);

Word mirror_word(const SignedPermutation& w);
Permutation iota(const SignedPermutation& w);
// Inverse of iota on rc-invariant permutations of even size.
SignedPermutation from_rc_invariant(const Permutation& v);

Permutation reverse_complement(const Permutation& v);
bool is_rc_invariant(const Permutation& v);
Permutation inverse(const Permutation& v);
Permutation apply_symmetry(const Permutation& v, DihedralSymmetry s);

SignedPermutation inverse_signed(const SignedPermutation& w);
IndexSet descent_set(const SignedPermutation& w);
SignedPermutation apply_generator(const SignedPermutation& w, int i);
std::size_t length(const SignedPermutation& w);
ReducedWord reduced_word(const SignedPermutation& w);
// Every reduced word, sorted lexicographically. Exponential in length(w):
// callers keep length small (the boolean predicate stops at length > n).
std::vector<ReducedWord> all_reduced_words(const SignedPermutation& w);
IndexSet support(const SignedPermutation& w);
SignedPermutation product_of(std::size_t n, const ReducedWord& word);

// All elements of S_m in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t m);

}  // namespace bperm
