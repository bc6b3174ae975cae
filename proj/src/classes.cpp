#include "bperm/classes.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "bperm/fixtures.hpp"

namespace bperm {

const char* method_name(Method m) {
  switch (m) {
    case Method::global_patterns: return "global-patterns";
    case Method::classical_patterns: return "classical-patterns";
    case Method::structural: return "structural";
  }
  return "unknown";
}

const SignedPatternSet& vexillary_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kVexillaryClassical);
  return set;
}
const SignedPatternSet& boolean_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kBooleanClassical);
  return set;
}
const SignedPatternSet& free_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kFreeClassical);
  return set;
}
const SignedPatternSet& smooth_b_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kSmoothBClassical);
  return set;
}
const SignedPatternSet& smooth_c_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kSmoothCClassical);
  return set;
}
const SignedPatternSet& smooth_bc_classical() {
  static const SignedPatternSet set = parse_signed_patterns(fixtures::kSmoothBCClassical);
  return set;
}
const GlobalPatternSet& vexillary_global() {
  static const GlobalPatternSet set = parse_global_patterns(fixtures::kVexillaryGlobal);
  return set;
}
const GlobalPatternSet& boolean_global() {
  static const GlobalPatternSet set = parse_global_patterns(fixtures::kBooleanGlobal);
  return set;
}
const GlobalPatternSet& free_global() {
  static const GlobalPatternSet set = parse_global_patterns(fixtures::kFreeGlobal);
  return set;
}
const GlobalPatternSet& smooth_bc_global() {
  static const GlobalPatternSet set = parse_global_patterns(fixtures::kSmoothBCGlobal);
  return set;
}
const GlobalPatternSet& grassmannian_global() {
  static const GlobalPatternSet set = parse_global_patterns(fixtures::kGrassmannianGlobal);
  return set;
}
const GlobalPatternSet& bigrassmannian_global() {
  static const GlobalPatternSet set = [] {
    std::vector<Permutation> all = grassmannian_global().patterns;
    for (const auto& p : grassmannian_global().patterns) all.push_back(inverse(p));
    return GlobalPatternSet(std::move(all));
  }();
  return set;
}

namespace {

bool all_words_repeat_free(const SignedPermutation& w) {
  for (const auto& word : all_reduced_words(w)) {
    std::uint32_t seen = 0;
    for (auto letter : word.letters) {
      if ((seen >> letter) & 1u) return false;
      seen |= std::uint32_t{1} << letter;
    }
  }
  return true;
}

}  // namespace

bool is_vexillary(const SignedPermutation& w, Method m) {
  switch (m) {
    case Method::global_patterns: return globally_avoids(w, vexillary_global());
    case Method::classical_patterns: return classically_avoids(w, vexillary_classical());
    case Method::structural: break;
  }
  throw Error(Errc::unsupported_method, "vexillary has no structural method");
}

bool is_boolean(const SignedPermutation& w, Method m) {
  switch (m) {
    case Method::global_patterns: return globally_avoids(w, boolean_global());
    case Method::classical_patterns: return classically_avoids(w, boolean_classical());
    case Method::structural:
      // A repeat-free word has at most n letters.
      if (length(w) > w.size()) return false;
      return all_words_repeat_free(w);
  }
  throw Error(Errc::unsupported_method, "unknown method");
}

bool is_free(const SignedPermutation& w, Method m) {
  switch (m) {
    case Method::global_patterns: return globally_avoids(w, free_global());
    case Method::classical_patterns: return classically_avoids(w, free_classical());
    case Method::structural: {
      const IndexSet supp = support(w);
      if ((supp.bits() & (supp.bits() >> 1)) != 0) return false;
      return length(w) == supp.size();
    }
  }
  throw Error(Errc::unsupported_method, "unknown method");
}

bool is_smooth_b(const SignedPermutation& w) { return classically_avoids(w, smooth_b_classical()); }

bool is_smooth_c(const SignedPermutation& w) { return classically_avoids(w, smooth_c_classical()); }

bool is_smooth_bc(const SignedPermutation& w, Method m) {
  switch (m) {
    case Method::global_patterns: return globally_avoids(w, smooth_bc_global());
    case Method::classical_patterns: return classically_avoids(w, smooth_bc_classical());
    case Method::structural: return is_smooth_b(w) && is_smooth_c(w);
  }
  throw Error(Errc::unsupported_method, "unknown method");
}

bool is_grassmannian(const SignedPermutation& w, bool strict) {
  const std::size_t d = descent_set(w).size();
  return strict ? d == 1 : d <= 1;
}

bool is_bigrassmannian(const SignedPermutation& w, bool strict) {
  return is_grassmannian(w, strict) && is_grassmannian(inverse_signed(w), strict);
}

bool is_grassmannian_conjectured(const SignedPermutation& w) { return globally_avoids(w, grassmannian_global()); }

bool is_bigrassmannian_conjectured(const SignedPermutation& w) {
  return globally_avoids(w, bigrassmannian_global());
}

namespace {

using Multiplicities = std::array<std::uint8_t, kMaxSignedSize>;
using MultiplicityMemo = std::unordered_map<SignedPermutation, Multiplicities, SignedPermutationHash>;

// For each generator, the largest number of times it occurs in a reduced
// word of w (maximised over words independently per generator).
const Multiplicities& max_multiplicities(const SignedPermutation& w, MultiplicityMemo& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Multiplicities best{};
  for (int d : descent_set(w).to_vector()) {
    Multiplicities below = max_multiplicities(apply_generator(w, d), memo);
    ++below[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], below[i]);
  }
  return memo.emplace(w, best).first->second;
}

}  // namespace

bool is_two_boolean(const SignedPermutation& w) {
  MultiplicityMemo memo;
  const Multiplicities& m = max_multiplicities(w, memo);
  return std::all_of(m.begin(), m.end(), [](std::uint8_t x) { return x <= 2; });
}

// ---------------------------------------------------------------------------
// Colayered permutations and compositions

int Composition::size() const {
  int total = 0;
  for (int x : parts) total += x;
  return total;
}

bool Composition::is_palindromic() const { return std::equal(parts.begin(), parts.end(), parts.rbegin()); }

int Composition::max_part() const { return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end()); }

std::string to_string(const Composition& c) {
  std::string out;
  for (int x : c.parts) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

namespace {

// Splits into maximal runs of +1 steps; false unless each run ends one below
// where the previous run started (the first ending at m).
bool split_colayered(const Permutation& v, Composition& out) {
  out.parts.clear();
  const std::size_t m = v.size();
  std::size_t i = 0;
  int next_top = static_cast<int>(m);  // largest value the next block must end at
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && v[j + 1] == v[j] + 1) ++j;
    if (v[j] != next_top) return false;
    next_top = v[i] - 1;
    out.parts.push_back(static_cast<int>(j - i + 1));
    i = j + 1;
  }
  return true;
}

}  // namespace

bool is_colayered(const Permutation& v, Method m) {
  switch (m) {
    case Method::classical_patterns:
    case Method::global_patterns:
      return !unsigned_contains(v, Permutation::from({1, 3, 2})) && !unsigned_contains(v, Permutation::from({2, 1, 3}));
    case Method::structural: {
      Composition c;
      return split_colayered(v, c);
    }
  }
  throw Error(Errc::unsupported_method, "unknown method");
}

Composition composition_of(const Permutation& v) {
  Composition c;
  if (!split_colayered(v, c)) throw Error(Errc::not_colayered, "permutation " + to_string(v) + " is not colayered");
  return c;
}

Permutation colayered_from(const Composition& c) {
  std::vector<int> out;
  int top = c.size();
  for (int part : c.parts) {
    if (part <= 0) throw Error(Errc::invalid_argument, "composition parts must be positive");
    for (int x = top - part + 1; x <= top; ++x) out.push_back(x);
    top -= part;
  }
  return Permutation::from(out);
}

Composition signed_composition(const SignedPermutation& w) {
  const Permutation v = iota(w);
  Composition c;
  if (!split_colayered(v, c)) {
    throw Error(Errc::not_in_132_class, "signed permutation " + to_string(w) + " globally contains 132");
  }
  return c;
}

// ---------------------------------------------------------------------------

std::vector<std::string> property_names() {
  return {"vexillary", "boolean",  "free",           "smooth-b",           "smooth-c",
          "smooth-bc", "grassmannian", "bigrassmannian", "two-boolean"};
}

bool has_property(const SignedPermutation& w, const std::string& name) {
  if (name == "vexillary") return is_vexillary(w);
  if (name == "boolean") return is_boolean(w, Method::structural);
  if (name == "free") return is_free(w, Method::structural);
  if (name == "smooth-b") return is_smooth_b(w);
  if (name == "smooth-c") return is_smooth_c(w);
  if (name == "smooth-bc") return is_smooth_bc(w, Method::structural);
  if (name == "grassmannian") return is_grassmannian(w);
  if (name == "bigrassmannian") return is_bigrassmannian(w);
  if (name == "two-boolean") return is_two_boolean(w);
  throw Error(Errc::invalid_argument, "unknown property '" + name + "'");
}

}  // namespace bperm
