#include "bperm/patterns.hpp"

#include <algorithm>
#include <unordered_set>

namespace bperm {

void GlobalPatternSet::normalize() {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

std::size_t GlobalPatternSet::max_size() const {
  std::size_t m = 0;
  for (const auto& p : patterns) m = std::max(m, p.size());
  return m;
}

void SignedPatternSet::normalize() {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

namespace {

template <class F>
void for_each_token(std::string_view text, F&& f) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    if (token.find_first_not_of(" \t\r\n") != std::string_view::npos) f(token);
    start = end + 1;
  }
}

}  // namespace

GlobalPatternSet parse_global_patterns(std::string_view text) {
  std::vector<Permutation> out;
  try {
    for_each_token(text, [&](std::string_view t) { out.push_back(parse_permutation(t)); });
  } catch (const Error& e) {
    throw Error(Errc::parse_error, std::string("bad pattern set: ") + e.what());
  }
  return GlobalPatternSet(std::move(out));
}

SignedPatternSet parse_signed_patterns(std::string_view text) {
  std::vector<SignedPermutation> out;
  try {
    for_each_token(text, [&](std::string_view t) { out.push_back(parse_signed(t)); });
  } catch (const Error& e) {
    throw Error(Errc::parse_error, std::string("bad pattern set: ") + e.what());
  }
  return SignedPatternSet(std::move(out));
}

std::string to_string(const GlobalPatternSet& set) {
  std::string out;
  for (const auto& p : set.patterns) {
    if (!out.empty()) out += ';';
    out += to_string(p);
  }
  return out;
}

std::string to_string(const SignedPatternSet& set) {
  std::string out;
  for (const auto& q : set.patterns) {
    if (!out.empty()) out += ';';
    out += to_string(q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

// Chooses positions left to right; a new position must compare with every
// chosen one exactly as the pattern does. Returns the number of occurrences
// found, stopping at the first one when `first_only`.
struct Matcher {
  std::span<const Letter> word;
  std::span<const Letter> pattern;
  bool first_only;
  std::array<std::size_t, kMaxPermutationSize> chosen{};

  std::uint64_t search(std::size_t depth, std::size_t from) {
    const std::size_t k = pattern.size();
    if (depth == k) return 1;
    std::uint64_t found = 0;
    const std::size_t last = word.size() - (k - depth);
    for (std::size_t pos = from; pos <= last; ++pos) {
      const Letter x = word[pos];
      bool ok = true;
      for (std::size_t l = 0; l < depth; ++l) {
        if ((word[chosen[l]] < x) != (pattern[l] < pattern[depth])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[depth] = pos;
      found += search(depth + 1, pos + 1);
      if (found != 0 && first_only) return found;
    }
    return found;
  }
};

struct SignedMatcher {
  std::span<const Letter> window;
  std::span<const Letter> pattern;
  std::array<std::size_t, kMaxSignedSize> chosen{};

  static int abs_of(Letter x) { return x < 0 ? -x : x; }

  bool search(std::size_t depth, std::size_t from) {
    const std::size_t k = pattern.size();
    if (depth == k) return true;
    const std::size_t last = window.size() - (k - depth);
    const bool negative = pattern[depth] < 0;
    const int target = abs_of(pattern[depth]);
    for (std::size_t pos = from; pos <= last; ++pos) {
      const Letter x = window[pos];
      if ((x < 0) != negative) continue;
      bool ok = true;
      for (std::size_t l = 0; l < depth; ++l) {
        if ((abs_of(window[chosen[l]]) < abs_of(x)) != (abs_of(pattern[l]) < target)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[depth] = pos;
      if (search(depth + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool word_contains(std::span<const Letter> word, std::span<const Letter> pattern) {
  if (pattern.size() > word.size()) return false;
  if (pattern.empty()) return true;
  Matcher m{word, pattern, true};
  return m.search(0, 0) != 0;
}

std::uint64_t count_occurrences(std::span<const Letter> word, std::span<const Letter> pattern) {
  if (pattern.size() > word.size()) return 0;
  if (pattern.empty()) return 1;
  Matcher m{word, pattern, false};
  return m.search(0, 0);
}

bool unsigned_contains(const Permutation& v, const Permutation& p) { return word_contains(v.word(), p.word()); }

bool classical_contains(const SignedPermutation& w, const SignedPermutation& q) {
  if (q.size() > w.size()) return false;
  if (q.size() == 0) return true;
  SignedMatcher m{w.window(), q.window()};
  return m.search(0, 0);
}

bool global_contains(const SignedPermutation& w, const Permutation& p) {
  const Word mirror = mirror_word(w);
  return word_contains(mirror.span(), p.word());
}

std::uint64_t global_occurrences(const SignedPermutation& w, const Permutation& p) {
  const Word mirror = mirror_word(w);
  return count_occurrences(mirror.span(), p.word());
}

bool globally_avoids(const SignedPermutation& w, const GlobalPatternSet& set) {
  const Word mirror = mirror_word(w);
  for (const auto& p : set.patterns) {
    if (word_contains(mirror.span(), p.word())) return false;
  }
  return true;
}

bool classically_avoids(const SignedPermutation& w, const SignedPatternSet& set) {
  for (const auto& q : set.patterns) {
    if (classical_contains(w, q)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

SignedPermutationEnumerator::SignedPermutationEnumerator(std::size_t n, std::optional<int> first)
    : n_(static_cast<int>(n)), first_(first) {
  if (n > kMaxSignedSize) throw Error(Errc::size_cap_exceeded, "n exceeds " + std::to_string(kMaxSignedSize));
  window_.resize(n);
  if (first_) {
    const int a = *first_ < 0 ? -*first_ : *first_;
    if (a == 0 || a > n_) done_ = true;
  }
}

void SignedPermutationEnumerator::place(int depth, int candidate) {
  const int value = value_of(candidate);
  cursor_[static_cast<std::size_t>(depth)] = candidate;
  window_[static_cast<std::size_t>(depth)] = static_cast<Letter>(value);
  used_ |= std::uint32_t{1} << (value < 0 ? -value : value);
}

void SignedPermutationEnumerator::fill_from(int depth) {
  for (int d = depth; d < n_; ++d) {
    if (d == 0 && first_) {
      const int v = *first_;
      place(0, v < 0 ? v + n_ : v + n_ - 1);
      continue;
    }
    for (int c = 0; c < 2 * n_; ++c) {
      const int v = value_of(c);
      if (!((used_ >> (v < 0 ? -v : v)) & 1u)) {
        place(d, c);
        break;
      }
    }
  }
}

bool SignedPermutationEnumerator::next(SignedPermutation& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill_from(0);
    out = SignedPermutation::from_trusted(window_);
    if (n_ == 0) done_ = true;
    return true;
  }
  for (int d = n_ - 1; d >= 0; --d) {
    const int old = value_of(cursor_[static_cast<std::size_t>(d)]);
    used_ &= ~(std::uint32_t{1} << (old < 0 ? -old : old));
    if (d == 0 && first_) break;
    for (int c = cursor_[static_cast<std::size_t>(d)] + 1; c < 2 * n_; ++c) {
      const int v = value_of(c);
      if (!((used_ >> (v < 0 ? -v : v)) & 1u)) {
        place(d, c);
        fill_from(d + 1);
        out = SignedPermutation::from_trusted(window_);
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

AvoiderStream gav(std::size_t n, GlobalPatternSet set) {
  return AvoiderStream(n, [set = std::move(set)](const SignedPermutation& w) { return globally_avoids(w, set); });
}

AvoiderStream classical_avoiders(std::size_t n, SignedPatternSet set) {
  return AvoiderStream(n,
                       [set = std::move(set)](const SignedPermutation& w) { return classically_avoids(w, set); });
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  return AvoiderStream(n, [](const SignedPermutation&) { return true; }).collect();
}

// ---------------------------------------------------------------------------
// Basis construction

SignedPermutation delete_entry(const SignedPermutation& q, std::size_t j) {
  const int removed = q[j] < 0 ? -q[j] : q[j];
  SignedPermutation::Window out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i == j) continue;
    int x = q[i];
    const int a = x < 0 ? -x : x;
    if (a > removed) x += x < 0 ? 1 : -1;
    out.push_back(static_cast<Letter>(x));
  }
  return SignedPermutation::from_trusted(out);
}

SignedPatternSet global_basis(const GlobalPatternSet& set) {
  if (set.empty()) throw Error(Errc::invalid_argument, "global_basis needs a nonempty pattern set");
  const std::size_t m = set.max_size();
  if (m > kMaxBasisPatternSize) {
    throw Error(Errc::pattern_too_large, "patterns of size > " + std::to_string(kMaxBasisPatternSize));
  }
  std::unordered_set<SignedPermutation, SignedPermutationHash> containing;
  for (std::size_t k = 0; k <= m; ++k) {
    SignedPermutationEnumerator walker(k);
    SignedPermutation q;
    while (walker.next(q)) {
      if (!globally_avoids(q, set)) containing.insert(q);
    }
  }
  // The collection is closed upward under classical containment, so an
  // element is minimal iff no single deletion stays inside it.
  std::vector<SignedPermutation> minimal;
  for (const auto& q : containing) {
    bool is_minimal = true;
    for (std::size_t j = 0; j < q.size() && is_minimal; ++j) {
      if (containing.count(delete_entry(q, j))) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(q);
  }
  return SignedPatternSet(std::move(minimal));
}

GlobalPatternSet apply_symmetry(const GlobalPatternSet& set, DihedralSymmetry s) {
  std::vector<Permutation> out;
  for (const auto& p : set.patterns) out.push_back(apply_symmetry(p, s));
  return GlobalPatternSet(std::move(out));
}

std::pair<std::uint64_t, std::uint64_t> symmetry_class_counts(const GlobalPatternSet& set, DihedralSymmetry s,
                                                              std::size_t n) {
  return {gav(n, set).count(), gav(n, apply_symmetry(set, s)).count()};
}

GlobalPatternSet rc_reduce(const GlobalPatternSet& set) {
  std::vector<Permutation> out;
  for (const auto& p : set.patterns) out.push_back(std::min(p, reverse_complement(p)));
  return GlobalPatternSet(std::move(out));
}

}  // namespace bperm
