#include "bperm/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

namespace bperm {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_window: return "InvalidWindow";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::pattern_too_large: return "PatternTooLarge";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::unknown_check: return "UnknownCheck";
    case Errc::not_colayered: return "NotColayered";
    case Errc::not_in_132_class: return "NotIn132AvoidanceClass";
    case Errc::unsupported_method: return "UnsupportedMethod";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Construction and text form

Permutation Permutation::from(std::span<const int> oneline) {
  const std::size_t m = oneline.size();
  if (m > kMaxPermutationSize) {
    throw Error(Errc::invalid_permutation, "permutation larger than " + std::to_string(kMaxPermutationSize));
  }
  std::uint64_t seen = 0;
  Permutation v;
  for (int x : oneline) {
    if (x < 1 || static_cast<std::size_t>(x) > m || ((seen >> x) & 1u)) {
      throw Error(Errc::invalid_permutation, "not a permutation of 1.." + std::to_string(m));
    }
    seen |= std::uint64_t{1} << x;
    v.word_.push_back(static_cast<Letter>(x));
  }
  return v;
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> values(m);
  std::iota(values.begin(), values.end(), 1);
  return from(values);
}

SignedPermutation SignedPermutation::from(std::span<const int> window) {
  const std::size_t n = window.size();
  if (n > kMaxSignedSize) {
    throw Error(Errc::invalid_window, "window larger than " + std::to_string(kMaxSignedSize));
  }
  std::uint32_t seen = 0;
  SignedPermutation w;
  for (int x : window) {
    const int a = x < 0 ? -x : x;
    if (a == 0 || static_cast<std::size_t>(a) > n || ((seen >> a) & 1u)) {
      throw Error(Errc::invalid_window, "invalid signed window entry " + std::to_string(x));
    }
    seen |= std::uint32_t{1} << a;
    w.window_.push_back(static_cast<Letter>(x));
  }
  return w;
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return from(values);
}

std::size_t SignedPermutationHash::operator()(const SignedPermutation& w) const noexcept {
  std::size_t h = w.size();
  for (Letter x : w.window()) h = h * 131 + static_cast<std::size_t>(x + 64);
  return h;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<int> parse_entries(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  if (text.find(',') == std::string_view::npos) {
    // Compact form: one digit per entry, '-' negates the next digit.
    bool negate = false;
    for (char c : text) {
      if (c == '-') {
        if (negate) throw Error(Errc::parse_error, "bad entry in '" + std::string(text) + "'");
        negate = true;
      } else if (c >= '1' && c <= '9') {
        out.push_back(negate ? -(c - '0') : (c - '0'));
        negate = false;
      } else {
        throw Error(Errc::parse_error, "bad entry in '" + std::string(text) + "'");
      }
    }
    if (negate) throw Error(Errc::parse_error, "dangling '-' in '" + std::string(text) + "'");
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = trim(text.substr(start, end - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(Errc::parse_error, "bad entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

template <class Range>
std::string join(const Range& values) {
  std::string out;
  bool first = true;
  for (auto x : values) {
    if (!first) out += ',';
    out += std::to_string(static_cast<int>(x));
    first = false;
  }
  return out;
}

}  // namespace

SignedPermutation parse_signed(std::string_view text) { return SignedPermutation::from(parse_entries(text)); }

Permutation parse_permutation(std::string_view text) { return Permutation::from(parse_entries(text)); }

std::string to_string(const SignedPermutation& w) { return join(w.window()); }

std::string to_string(const Permutation& v) { return join(v.word()); }

// ---------------------------------------------------------------------------
// Mirror word, iota, symmetries

Permutation standardize(std::span<const Letter> word) {
  Permutation v;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Letter rank = 1;
    for (Letter y : word) rank += static_cast<Letter>(y < word[i]);
    v.word_.push_back(rank);
  }
  return v;
}

Word mirror_word(const SignedPermutation& w) {
  Word out;
  const std::size_t n = w.size();
  for (std::size_t i = n; i-- > 0;) out.push_back(static_cast<Letter>(-w[i]));
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<Letter>(w[i]));
  return out;
}

Permutation iota(const SignedPermutation& w) {
  // Value x in [-n, n] \ {0} has rank x + n + 1 for negative x and x + n for positive x.
  const int n = static_cast<int>(w.size());
  std::vector<int> out;
  out.reserve(2 * w.size());
  for (int x : mirror_word(w)) out.push_back(x < 0 ? x + n + 1 : x + n);
  return Permutation::from(out);
}

SignedPermutation from_rc_invariant(const Permutation& v) {
  if (v.size() % 2 != 0 || !is_rc_invariant(v)) {
    throw Error(Errc::invalid_argument, "not an rc-invariant permutation of even size");
  }
  const int n = static_cast<int>(v.size() / 2);
  std::vector<int> window;
  for (std::size_t i = v.size() / 2; i < v.size(); ++i) {
    const int r = v[i];
    window.push_back(r > n ? r - n : r - n - 1);
  }
  return SignedPermutation::from(window);
}

Permutation reverse_complement(const Permutation& v) {
  return apply_symmetry(v, DihedralSymmetry::reverse_complement());
}

bool is_rc_invariant(const Permutation& v) {
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (v[i] != static_cast<int>(m) + 1 - v[m - 1 - i]) return false;
  }
  return true;
}

Permutation inverse(const Permutation& v) { return apply_symmetry(v, DihedralSymmetry::inverse()); }

Permutation apply_symmetry(const Permutation& v, DihedralSymmetry s) {
  const int m = static_cast<int>(v.size());
  std::vector<int> out(v.size());
  for (int i = 1; i <= m; ++i) {
    int x = 2 * i - (m + 1);
    int y = 2 * v[static_cast<std::size_t>(i - 1)] - (m + 1);
    if (s.transposes()) std::swap(x, y);
    if (s.negates_x()) x = -x;
    if (s.negates_y()) y = -y;
    out[static_cast<std::size_t>((x + m + 1) / 2 - 1)] = (y + m + 1) / 2;
  }
  return Permutation::from(out);
}

std::vector<DihedralSymmetry> DihedralSymmetry::all() {
  std::vector<DihedralSymmetry> out;
  for (int bits = 0; bits < 8; ++bits) out.push_back({(bits & 4) != 0, (bits & 1) != 0, (bits & 2) != 0});
  return out;
}

DihedralSymmetry operator*(DihedralSymmetry a, DihedralSymmetry b) {
  // Matrix form M = D(fx, fy) T^t, and T D(fx, fy) = D(fy, fx) T.
  bool bx = b.flip_x_, by = b.flip_y_;
  if (a.transpose_) std::swap(bx, by);
  return {a.transpose_ != b.transpose_, a.flip_x_ != bx, a.flip_y_ != by};
}

std::string DihedralSymmetry::name() const {
  std::string base;
  if (flip_x_ && flip_y_) {
    base = "rc";
  } else if (flip_x_) {
    base = "reverse";
  } else if (flip_y_) {
    base = "complement";
  }
  if (!transpose_) return base.empty() ? "identity" : base;
  return base.empty() ? "inverse" : base + "*inverse";
}

// ---------------------------------------------------------------------------
// Coxeter structure

SignedPermutation inverse_signed(const SignedPermutation& w) {
  SignedPermutation::Window out;
  out.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int x = w[i];
    const int pos = static_cast<int>(i) + 1;
    if (x > 0) {
      out[static_cast<std::size_t>(x - 1)] = static_cast<Letter>(pos);
    } else {
      out[static_cast<std::size_t>(-x - 1)] = static_cast<Letter>(-pos);
    }
  }
  return SignedPermutation::from_trusted(out);
}

IndexSet descent_set(const SignedPermutation& w) {
  IndexSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int left = i == 0 ? 0 : w[i - 1];
    if (left > w[i]) out.insert(static_cast<int>(i));
  }
  return out;
}

SignedPermutation apply_generator(const SignedPermutation& w, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= w.size()) {
    throw Error(Errc::index_out_of_range, "generator index " + std::to_string(i) + " out of range");
  }
  SignedPermutation::Window out = w.raw();
  if (i == 0) {
    out[0] = static_cast<Letter>(-out[0]);
  } else {
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
  }
  return SignedPermutation::from_trusted(out);
}

std::size_t length(const SignedPermutation& w) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) ++total;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++total;
      if (w[i] + w[j] < 0) ++total;
    }
  }
  return total;
}

ReducedWord reduced_word(const SignedPermutation& w) {
  ReducedWord word;
  SignedPermutation current = w;
  for (IndexSet des = descent_set(current); !des.empty(); des = descent_set(current)) {
    const int i = 31 - std::countl_zero(des.bits());
    word.letters.push_back(static_cast<std::uint8_t>(i));
    current = apply_generator(current, i);
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

namespace {

using WordMemo = std::unordered_map<SignedPermutation, std::vector<ReducedWord>, SignedPermutationHash>;

const std::vector<ReducedWord>& reduced_words_memo(const SignedPermutation& w, WordMemo& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<ReducedWord> words;
  const IndexSet des = descent_set(w);
  if (des.empty()) {
    words.push_back({});
  } else {
    for (int i : des.to_vector()) {
      for (const ReducedWord& prefix : reduced_words_memo(apply_generator(w, i), memo)) {
        ReducedWord extended = prefix;
        extended.letters.push_back(static_cast<std::uint8_t>(i));
        words.push_back(std::move(extended));
      }
    }
    std::sort(words.begin(), words.end());
  }
  return memo.emplace(w, std::move(words)).first->second;
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const SignedPermutation& w) {
  WordMemo memo;
  return reduced_words_memo(w, memo);
}

IndexSet support(const SignedPermutation& w) {
  IndexSet out;
  for (auto letter : reduced_word(w).letters) out.insert(letter);
  return out;
}

SignedPermutation product_of(std::size_t n, const ReducedWord& word) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (auto letter : word.letters) w = apply_generator(w, letter);
  return w;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<int> values(m);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace bperm
