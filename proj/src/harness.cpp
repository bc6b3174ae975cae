#include "bperm/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "bperm/classes.hpp"
#include "bperm/enumeration.hpp"
#include "bperm/patterns.hpp"
#include "bperm/tableaux.hpp"

#ifndef BPERM_DEFAULT_DATA_DIR
#define BPERM_DEFAULT_DATA_DIR "data"
#endif

namespace bperm {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::conjecture_holds: return "conjecture-holds";
    case CheckStatus::conjecture_fails: return "conjecture-fails";
  }
  return "fail";
}

CheckStatus parse_status(std::string_view name) {
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjecture_holds, CheckStatus::conjecture_fails}) {
    if (name == status_name(s)) return s;
  }
  throw Error(Errc::parse_error, "unknown status '" + std::string(name) + "'");
}

bool CheckReport::same_outcome(const CheckReport& other) const {
  return check == other.check && status == other.status && max_n == other.max_n && rows == other.rows;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("BPERM_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return BPERM_DEFAULT_DATA_DIR;
}

std::map<int, BigInt> load_sequence_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open fixture " + path.string());
  std::map<int, BigInt> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    std::string value;
    if (!(fields >> n >> value) || value.empty() ||
        !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw Error(Errc::parse_error, "bad fixture line '" + line + "'");
    }
    out[n] = BigInt(value);
  }
  return out;
}

namespace {

using SignedSet = std::vector<SignedPermutation>;
using Predicate = std::function<bool(const SignedPermutation&)>;

SignedSet collect(std::size_t n, Predicate keep) { return AvoiderStream(n, std::move(keep)).collect(); }

std::string labelled(const std::string& label, const std::string& value) { return label + ": " + value; }

std::string str(std::uint64_t x) { return std::to_string(x); }

// Row comparing several sets that should coincide. Matches iff all are equal.
DetailRow set_equality_row(int n, const std::string& label,
                           const std::vector<std::pair<std::string, const SignedSet*>>& sets) {
  const SignedSet& reference = *sets.front().second;
  std::string expected = labelled(label, str(reference.size()));
  bool equal = true;
  for (const auto& [name, set] : sets) equal = equal && (*set == reference);
  if (equal) return {n, expected, expected};
  std::string observed = label + ": differs";
  for (const auto& [name, set] : sets) {
    observed += " " + name + "=" + str(set->size());
    if (*set != reference) {
      SignedSet diff;
      std::set_symmetric_difference(set->begin(), set->end(), reference.begin(), reference.end(),
                                    std::back_inserter(diff));
      if (!diff.empty()) observed += "(e.g. " + to_string(diff.front()) + ")";
    }
  }
  return {n, expected, observed};
}

DetailRow count_row(int n, const std::string& label, const BigInt& expected, const BigInt& observed) {
  return {n, labelled(label, expected.str()), labelled(label, observed.str())};
}

std::vector<DetailRow> persistence_rows(int max_n, const std::string& family,
                                        const std::vector<std::pair<std::string, Predicate>>& methods) {
  std::vector<DetailRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<SignedSet> sets;
    for (const auto& [name, pred] : methods) sets.push_back(collect(static_cast<std::size_t>(n), pred));
    std::vector<std::pair<std::string, const SignedSet*>> named;
    for (std::size_t i = 0; i < methods.size(); ++i) named.emplace_back(methods[i].first, &sets[i]);
    rows.push_back(set_equality_row(n, family, named));
  }
  return rows;
}

std::vector<DetailRow> check_vexillary(int max_n, const RunOptions&) {
  if (max_n < 1) return {};
  const SignedPatternSet basis = global_basis(vexillary_global());
  return persistence_rows(max_n, "vexillary",
                          {{"global", [](const auto& w) { return is_vexillary(w, Method::global_patterns); }},
                           {"classical", [](const auto& w) { return is_vexillary(w, Method::classical_patterns); }},
                           {"basis", [basis](const auto& w) { return classically_avoids(w, basis); }}});
}

std::vector<DetailRow> check_boolean(int max_n, const RunOptions&) {
  return persistence_rows(max_n, "boolean",
                          {{"global", [](const auto& w) { return is_boolean(w, Method::global_patterns); }},
                           {"classical", [](const auto& w) { return is_boolean(w, Method::classical_patterns); }},
                           {"words", [](const auto& w) { return is_boolean(w, Method::structural); }}});
}

std::vector<DetailRow> check_free(int max_n, const RunOptions&) {
  return persistence_rows(max_n, "free",
                          {{"global", [](const auto& w) { return is_free(w, Method::global_patterns); }},
                           {"classical", [](const auto& w) { return is_free(w, Method::classical_patterns); }},
                           {"support", [](const auto& w) { return is_free(w, Method::structural); }}});
}

std::vector<DetailRow> check_smooth_bc(int max_n, const RunOptions&) {
  auto rows = persistence_rows(
      max_n, "smooth-bc",
      {{"global", [](const auto& w) { return is_smooth_bc(w, Method::global_patterns); }},
       {"classical", [](const auto& w) { return is_smooth_bc(w, Method::classical_patterns); }},
       {"b-and-c", [](const auto& w) { return is_smooth_bc(w, Method::structural); }}});
  if (max_n >= 2) {
    const auto w1 = SignedPermutation::from({-2, -1});
    const auto w2 = SignedPermutation::from({1, -2});
    const bool c_witness = is_smooth_c(w1) && global_contains(w1, Permutation::from({3, 4, 1, 2}));
    const bool b_witness = is_smooth_b(w2) && global_contains(w2, Permutation::from({4, 2, 3, 1}));
    rows.push_back({2, "witness -2,-1 smooth-C and globally contains 3412: true",
                    std::string("witness -2,-1 smooth-C and globally contains 3412: ") + (c_witness ? "true" : "false")});
    rows.push_back({2, "witness 1,-2 smooth-B and globally contains 4231: true",
                    std::string("witness 1,-2 smooth-B and globally contains 4231: ") + (b_witness ? "true" : "false")});
  }
  return rows;
}

std::vector<DetailRow> check_central_binomial(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  const GlobalPatternSet p321{Permutation::from({3, 2, 1})};
  const GlobalPatternSet p123{Permutation::from({1, 2, 3})};
  for (int n = 1; n <= max_n; ++n) {
    const BigInt expected = binomial(2 * n, n);
    rows.push_back(count_row(n, "GAV(321)", expected, count_gav(static_cast<std::size_t>(n), p321, options.jobs)));
    rows.push_back(count_row(n, "GAV(123)", expected, count_gav(static_cast<std::size_t>(n), p123, options.jobs)));
  }
  // Two-row domino tableaux B(n, k) and the sum of their squares.
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    BigInt squares = 0;
    for (int k = 0; k <= n; ++k) {
      const BigInt count = domino_count(Partition::from({2 * n - k, k}));
      squares += count * count;
      rows.push_back(count_row(n, "domino(" + std::to_string(2 * n - k) + "," + std::to_string(k) + ")",
                               binomial(n, k / 2), count));
    }
    rows.push_back(count_row(n, "sum of squared two-row domino counts", binomial(2 * n, n), squares));
  }
  return rows;
}

// Sum over domino-tileable shapes of size 2n satisfying `keep` of count^2.
BigInt squared_domino_sum(int n, const std::function<bool(const Partition&)>& keep) {
  BigInt total = 0;
  for (const Partition& shape : partitions_of(2 * n)) {
    if (!keep(shape) || !is_domino_tileable(shape)) continue;
    const BigInt c = domino_count(shape);
    total += c * c;
  }
  return total;
}

std::vector<DetailRow> check_greene_domino(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= 2 * n; ++k) {
      const auto size = static_cast<std::size_t>(n);
      const BigInt inc = count_gav(size, GlobalPatternSet{increasing_pattern(static_cast<std::size_t>(k) + 1)},
                                   options.jobs);
      rows.push_back(count_row(n, "GAV(1..k+1) k=" + std::to_string(k),
                               squared_domino_sum(n, [k](const Partition& s) { return s.first() <= k; }), inc));
      const BigInt dec = count_gav(size, GlobalPatternSet{decreasing_pattern(static_cast<std::size_t>(k) + 1)},
                                   options.jobs);
      rows.push_back(count_row(
          n, "GAV(k+1..1) k=" + std::to_string(k),
          squared_domino_sum(n, [k](const Partition& s) { return static_cast<int>(s.length()) <= k; }), dec));
    }
  }
  return rows;
}

BigInt power_of_two(int e) { return BigInt(1) << e; }

std::vector<DetailRow> check_fib_like(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  if (max_n < 1) return rows;
  // Closed forms for k <= 10 and 0 <= n < k.
  for (int k = 1; k <= 10; ++k) {
    for (int n = 0; n < k; ++n) {
      const int half = k / 2;
      const BigInt closed = n <= half ? power_of_two(n) : power_of_two(n) - power_of_two(n - half - 1);
      rows.push_back(count_row(n, "closed form f^(" + std::to_string(k) + ")_" + std::to_string(n + k + 1), closed,
                               fib_like(k, n + k + 1)));
    }
  }
  const Permutation p132 = Permutation::from({1, 3, 2});
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    for (int k = 1; k <= 4; ++k) {
      const GlobalPatternSet set{p132, increasing_pattern(static_cast<std::size_t>(k) + 1)};
      rows.push_back(count_row(n, "GAV(132, 1..k+1) k=" + std::to_string(k), count_gav_132_and_increasing(n, k),
                               count_gav(static_cast<std::size_t>(n), set, options.jobs)));
    }
    // Standard Fibonacci numbers F(n + 2) for the k = 2 column.
    BigInt a = 1, b = 1;
    for (int t = 0; t < n; ++t) {
      const BigInt c = a + b;
      a = b;
      b = c;
    }
    const GlobalPatternSet set{p132, Permutation::from({1, 2, 3})};
    rows.push_back(count_row(n, "Fibonacci column k=2", b, count_gav(static_cast<std::size_t>(n), set, options.jobs)));
  }
  return rows;
}

std::vector<DetailRow> check_binomial_sum(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  const Permutation p132 = Permutation::from({1, 3, 2});
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const auto size = static_cast<std::size_t>(n);
    for (int k = 1; k <= 5; ++k) {
      const GlobalPatternSet set{p132, decreasing_pattern(static_cast<std::size_t>(k) + 1)};
      rows.push_back(count_row(n, "GAV(132, k+1..1) k=" + std::to_string(k), count_gav_132_and_decreasing(n, k),
                               count_gav(size, set, options.jobs)));
    }
    const BigInt gav132 = count_gav(size, GlobalPatternSet{p132}, options.jobs);
    rows.push_back(count_row(n, "GAV(132) vs 2^n", power_of_two(n), gav132));
    rows.push_back(count_row(n, "palindromic compositions of 2n", power_of_two(n),
                             count_palindromic_compositions(2 * n)));
    // The composition map is a bijection onto palindromic compositions.
    std::set<Composition> image;
    for (const auto& w : gav(size, GlobalPatternSet{p132}).collect()) image.insert(signed_composition(w));
    const auto all = palindromic_compositions(2 * n);
    const bool bijective = image.size() == gav132 && std::set<Composition>(all.begin(), all.end()) == image;
    rows.push_back({n, "composition map bijective: true",
                    std::string("composition map bijective: ") + (bijective ? "true" : "false")});
  }
  return rows;
}

std::vector<std::pair<int, int>> es_pairs(int max_product) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= max_product; ++k) {
    for (int j = 1; k * j <= max_product; ++j) out.emplace_back(k, j);
  }
  return out;
}

std::vector<DetailRow> check_es_unsigned(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  for (auto [k, j] : es_pairs(std::min(max_n, 6))) {
    const std::vector<Permutation> patterns{increasing_pattern(static_cast<std::size_t>(k) + 1),
                                            decreasing_pattern(static_cast<std::size_t>(j) + 1)};
    const std::string tag = "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")";
    const int bound = es_bound(k, j, false);
    rows.push_back(count_row(bound, "extremal " + tag, es_extremal_count(k, j, false),
                             unsigned_avoider_count(static_cast<std::size_t>(bound), patterns)));
    const BigInt catalan = catalan_multidim(j, k);
    rows.push_back(count_row(bound, "C_(j,k)^2 " + tag, catalan * catalan, es_extremal_count(k, j, false)));
    rows.push_back(count_row(bound + 1, "above bound " + tag, 0,
                             unsigned_avoider_count(static_cast<std::size_t>(bound) + 1, patterns)));
  }
  return rows;
}

std::vector<DetailRow> check_es_signed(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  for (auto [k, j] : es_pairs(std::min(max_n, 6))) {
    const GlobalPatternSet set{increasing_pattern(static_cast<std::size_t>(k) + 1),
                               decreasing_pattern(static_cast<std::size_t>(j) + 1)};
    const std::string tag = "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")";
    const int bound = es_bound(k, j, true);
    rows.push_back(count_row(bound, "extremal " + tag, es_extremal_count(k, j, true),
                             count_gav(static_cast<std::size_t>(bound), set, options.jobs)));
    rows.push_back(count_row(bound + 1, "above bound " + tag, 0,
                             count_gav(static_cast<std::size_t>(bound) + 1, set, options.jobs)));
  }
  return rows;
}

// All nonempty subsets of S_3.
std::vector<GlobalPatternSet> subsets_of_s3() {
  const auto s3 = all_permutations(3);
  std::vector<GlobalPatternSet> out;
  for (unsigned mask = 1; mask < (1u << s3.size()); ++mask) {
    std::vector<Permutation> chosen;
    for (std::size_t i = 0; i < s3.size(); ++i) {
      if ((mask >> i) & 1u) chosen.push_back(s3[i]);
    }
    out.emplace_back(std::move(chosen));
  }
  return out;
}

std::vector<DetailRow> check_symmetry(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  const auto subsets = subsets_of_s3();
  for (int n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(n);
    std::uint64_t pairs = 0, equal = 0;
    std::uint64_t reduced_equal = 0;
    for (const auto& set : subsets) {
      const std::uint64_t base = count_gav(size, set);
      for (auto s : DihedralSymmetry::all()) {
        ++pairs;
        equal += count_gav(size, apply_symmetry(set, s)) == base ? 1 : 0;
      }
      reduced_equal += gav(size, set).collect() == gav(size, rc_reduce(set)).collect() ? 1 : 0;
    }
    rows.push_back({n, labelled("(P,s) pairs with equal counts", str(pairs)),
                    labelled("(P,s) pairs with equal counts", str(equal))});
    rows.push_back({n, labelled("sets unchanged by rc reduction", str(subsets.size())),
                    labelled("sets unchanged by rc reduction", str(reduced_equal))});
  }
  return rows;
}

std::vector<DetailRow> check_iota(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(n);
    std::set<Permutation> image;
    for (const auto& w : all_signed_permutations(size)) image.insert(iota(w));
    std::set<Permutation> invariant;
    for (const auto& v : all_permutations(2 * size)) {
      if (is_rc_invariant(v)) invariant.insert(v);
    }
    const std::uint64_t group_order = all_signed_permutations(size).size();
    rows.push_back({n, labelled("|image of iota|", str(group_order)), labelled("|image of iota|", str(image.size()))});
    const std::string label = "iota image vs rc-invariant elements of S_2n";
    rows.push_back({n, labelled(label, str(image.size())),
                    invariant == image ? labelled(label, str(image.size()))
                                       : labelled(label, "differs: rc-invariant=" + str(invariant.size()))});
    // Global containment agrees with containment in the iota image.
    std::uint64_t tested = 0, agree = 0;
    for (std::size_t k = 1; k <= std::min<std::size_t>(2 * size, 5); ++k) {
      for (const auto& p : all_permutations(k)) {
        for (const auto& w : all_signed_permutations(size)) {
          ++tested;
          agree += global_contains(w, p) == unsigned_contains(iota(w), p) ? 1 : 0;
        }
      }
    }
    rows.push_back({n, labelled("containment transported by iota", str(tested)),
                    labelled("containment transported by iota", str(agree))});
  }
  return rows;
}

struct FeaturedSet {
  std::string name;
  const GlobalPatternSet& global;
  const SignedPatternSet& classical;
};

std::vector<FeaturedSet> featured_sets() {
  return {{"vexillary", vexillary_global(), vexillary_classical()},
          {"boolean", boolean_global(), boolean_classical()},
          {"free", free_global(), free_classical()},
          {"smooth-bc", smooth_bc_global(), smooth_bc_classical()}};
}

std::vector<DetailRow> check_gl_basis(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  if (max_n < 1) return rows;
  for (const auto& featured : featured_sets()) {
    const SignedPatternSet basis = global_basis(featured.global);
    rows.push_back({0, labelled("basis of " + featured.name, to_string(featured.classical)),
                    labelled("basis of " + featured.name, to_string(basis))});
    for (int n = 1; n <= max_n; ++n) {
      const auto size = static_cast<std::size_t>(n);
      const SignedSet global = gav(size, featured.global).collect();
      const SignedSet classical = classical_avoiders(size, basis).collect();
      rows.push_back(set_equality_row(n, "GAV vs basis avoiders for " + featured.name,
                                      {{"global", &global}, {"basis", &classical}}));
    }
  }
  return rows;
}

std::vector<DetailRow> check_grassmannian(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(n);
    const SignedSet grass = collect(size, [](const auto& w) { return is_grassmannian(w); });
    const SignedSet grass_conj = collect(size, [](const auto& w) { return is_grassmannian_conjectured(w); });
    rows.push_back(set_equality_row(n, "grassmannian", {{"descents", &grass}, {"global", &grass_conj}}));
    const SignedSet bigrass = collect(size, [](const auto& w) { return is_bigrassmannian(w); });
    const SignedSet bigrass_conj = collect(size, [](const auto& w) { return is_bigrassmannian_conjectured(w); });
    rows.push_back(set_equality_row(n, "bigrassmannian", {{"descents", &bigrass}, {"global", &bigrass_conj}}));
  }
  return rows;
}

std::vector<DetailRow> check_smooth_count(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  const std::vector<Permutation> patterns{Permutation::from({3, 4, 1, 2}), Permutation::from({4, 2, 3, 1})};
  for (int n = 1; n <= max_n; ++n) {
    rows.push_back(count_row(n, "|GAV_n(3412,4231)| vs |Av_(n+1)(3412,4231)|",
                             unsigned_avoider_count(static_cast<std::size_t>(n) + 1, patterns),
                             count_gav(static_cast<std::size_t>(n), GlobalPatternSet(patterns), options.jobs)));
  }
  return rows;
}

std::vector<DetailRow> check_gao_hanni(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  const GlobalPatternSet p2143{Permutation::from({2, 1, 4, 3})};
  const GlobalPatternSet p1234{Permutation::from({1, 2, 3, 4})};
  for (int n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(n);
    rows.push_back(count_row(n, "|GAV_n(2143)| vs |GAV_n(1234)|", count_gav(size, p2143, options.jobs),
                             count_gav(size, p1234, options.jobs)));
  }
  return rows;
}

std::vector<DetailRow> check_a115197(int max_n, const RunOptions& options) {
  std::vector<DetailRow> rows;
  if (max_n < 1) return rows;
  const auto reference = load_sequence_fixture(data_directory() / "a115197.txt");
  const GlobalPatternSet set{Permutation::from({2, 4, 1, 3}), Permutation::from({3, 1, 4, 2})};
  for (int n = 1; n <= max_n; ++n) {
    const std::string observed = str(count_gav(static_cast<std::size_t>(n), set, options.jobs));
    auto it = reference.find(n);
    const std::string expected = it == reference.end() ? "unavailable (no reference term)" : it->second.str();
    rows.push_back({n, labelled("|GAV_n(2413,3142)|", expected), labelled("|GAV_n(2413,3142)|", observed)});
  }
  return rows;
}

std::vector<DetailRow> check_two_boolean(int max_n, const RunOptions&) {
  std::vector<DetailRow> rows;
  const GlobalPatternSet patterns = parse_global_patterns("3421;4312;4321;4,5,6,1,2,3");
  for (int n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(n);
    const SignedSet global = gav(size, patterns).collect();
    const SignedSet words = collect(size, [](const auto& w) { return is_two_boolean(w); });
    rows.push_back(set_equality_row(n, "two-boolean", {{"global", &global}, {"words", &words}}));
  }
  return rows;
}

std::vector<Check> build_registry() {
  using K = CheckKind;
  std::vector<Check> checks = {
      {"thm-vexillary", 6, "GAV(2143) = avoiders of the nine-pattern list = avoiders of the computed basis",
       K::theorem, check_vexillary},
      {"thm-boolean", 5, "GAV(321,3412) = ten-pattern list avoiders = elements with repeat-free reduced words",
       K::theorem, check_boolean},
      {"thm-free", 6, "GAV(231,312,321) = eight-pattern list avoiders = commuting-support elements", K::theorem,
       check_free},
      {"thm-smooth-bc", 6, "GAV(3412,4231) = eleven-pattern list avoiders = smooth in types B and C", K::theorem,
       check_smooth_bc},
      {"thm-central-binomial", 8, "|GAV_n(321)| = |GAV_n(123)| = C(2n,n); two-row domino counts", K::theorem,
       check_central_binomial},
      {"thm-greene-domino", 4, "monotone avoidance counts = sums of squared domino tableau counts", K::theorem,
       check_greene_domino},
      {"thm-fib-like", 6, "Fibonacci-like closed forms and |GAV_n(132, 1..k+1)|", K::theorem, check_fib_like},
      {"thm-binomial-sum", 6, "|GAV_n(132, k+1..1)| binomial sums; palindromic composition bijection", K::theorem,
       check_binomial_sum},
      {"prop-es-unsigned", 6, "Erdos-Szekeres bound and extremal counts in S_n", K::theorem, check_es_unsigned},
      {"prop-es-signed", 6, "signed Erdos-Szekeres bound and extremal counts", K::theorem, check_es_signed},
      {"lemma-symmetry", 4, "dihedral invariance of class sizes; rc reduction", K::theorem, check_symmetry},
      {"cor-iota", 4, "iota bijects onto rc-invariant permutations and transports containment", K::theorem,
       check_iota},
      {"prop-gl-basis", 5, "computed bases of the featured sets and the resulting class equality", K::theorem,
       check_gl_basis},
      {"conj-grassmannian", 6, "Grassmannian/bigrassmannian = global avoiders of the conjectured sets",
       K::conjecture, check_grassmannian},
      {"conj-smooth-count", 7, "|GAV_n(3412,4231)| = |Av_(n+1)(3412,4231)|", K::conjecture, check_smooth_count},
      {"oq-gao-hanni", 7, "|GAV_n(2143)| = |GAV_n(1234)|", K::theorem, check_gao_hanni},
      {"oq-a115197", 6, "|GAV_n(2413,3142)| against the reference terms in data/a115197.txt", K::conjecture,
       check_a115197},
      {"oq-two-boolean", 4, "GAV(3421,4312,4321,456123) = elements using each generator at most twice",
       K::conjecture, check_two_boolean},
  };
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return checks;
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> registry = build_registry();
  return registry;
}

const Check* find_check(std::string_view id) {
  for (const auto& c : check_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckReport run_check(std::string_view id, int max_n, const RunOptions& options) {
  const Check* check = find_check(id);
  if (check == nullptr) throw Error(Errc::unknown_check, "unknown check '" + std::string(id) + "'");
  if (max_n > kMaxCheckSize) throw Error(Errc::size_cap_exceeded, "max_n > " + std::to_string(kMaxCheckSize));
  if (max_n < 0) throw Error(Errc::invalid_argument, "negative max_n");
  const int effective = std::min(max_n, check->max_n);
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.check = check->id;
  report.max_n = effective;
  report.rows = check->run(effective, options);
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::all_of(report.rows.begin(), report.rows.end(), [](const DetailRow& r) { return r.matches(); });
  if (check->kind == CheckKind::theorem) {
    report.status = ok ? CheckStatus::pass : CheckStatus::fail;
  } else {
    report.status = ok ? CheckStatus::conjecture_holds : CheckStatus::conjecture_fails;
  }
  return report;
}

std::vector<CheckReport> run_all(int max_n, const RunOptions& options, std::optional<std::string> only) {
  std::vector<CheckReport> out;
  for (const auto& check : check_registry()) {
    if (only && *only != check.id) continue;
    out.push_back(run_check(check.id, max_n, options));
  }
  return out;
}

bool any_theorem_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::fail; });
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) rows.push_back({{"n", r.n}, {"expected", r.expected}, {"observed", r.observed}});
  return {{"check", report.check},
          {"status", status_name(report.status)},
          {"max_n", report.max_n},
          {"rows", rows},
          {"millis", report.millis}};
}

CheckReport report_from_json(const nlohmann::json& doc) {
  try {
    CheckReport report;
    report.check = doc.at("check").get<std::string>();
    report.status = parse_status(doc.at("status").get<std::string>());
    report.max_n = doc.at("max_n").get<int>();
    report.millis = doc.at("millis").get<std::int64_t>();
    for (const auto& row : doc.at("rows")) {
      report.rows.push_back(
          {row.at("n").get<int>(), row.at("expected").get<std::string>(), row.at("observed").get<std::string>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad report JSON: ") + e.what());
  }
}

}  // namespace bperm
