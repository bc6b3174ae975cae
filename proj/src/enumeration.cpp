#include "bperm/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "bperm/tableaux.hpp"

namespace bperm {

BigInt fib_like(int k, int i) {
  if (k < 1 || i < 1) throw Error(Errc::invalid_argument, "fib_like needs k, i >= 1");
  std::vector<BigInt> f(static_cast<std::size_t>(std::max(i, k)) + 1, 0);
  f[static_cast<std::size_t>(k / 2 + 1)] = 1;
  for (int t = k + 1; t <= i; ++t) {
    BigInt sum = 0;
    for (int j = 1; j <= k; ++j) sum += f[static_cast<std::size_t>(t - j)];
    f[static_cast<std::size_t>(t)] = sum;
  }
  return f[static_cast<std::size_t>(i)];
}

BigInt count_gav_132_and_increasing(int n, int k) {
  if (n < 0 || k < 1) throw Error(Errc::invalid_argument, "need n >= 0, k >= 1");
  return fib_like(k, n + k + 1);
}

BigInt count_gav_132_and_decreasing(int n, int k) {
  if (n < 1 || k < 1) throw Error(Errc::invalid_argument, "need n >= 1, k >= 1");
  BigInt total = 0;
  for (int j = 1; j <= k; ++j) total += binomial(n - 1, (j - 1) / 2);
  return total;
}

namespace {

// Chooses the outer parts a_1 = a_m, a_2 = a_{m-1}, ...; whatever is left in
// the middle becomes one central part (or nothing).
void palindromes_rec(int remaining, std::optional<int> max_part, std::optional<int> max_parts,
                     std::vector<int>& half, std::vector<Composition>& out) {
  const int used = static_cast<int>(half.size()) * 2;
  auto emit = [&](std::optional<int> middle) {
    Composition c;
    c.parts = half;
    if (middle) c.parts.push_back(*middle);
    c.parts.insert(c.parts.end(), half.rbegin(), half.rend());
    out.push_back(std::move(c));
  };
  if (remaining == 0) {
    if (!max_parts || used <= *max_parts) emit(std::nullopt);
  } else if ((!max_part || remaining <= *max_part) && (!max_parts || used + 1 <= *max_parts)) {
    emit(remaining);
  }
  for (int a = 1; 2 * a <= remaining; ++a) {
    if (max_part && a > *max_part) break;
    if (max_parts && used + 2 > *max_parts) break;
    half.push_back(a);
    palindromes_rec(remaining - 2 * a, max_part, max_parts, half, out);
    half.pop_back();
  }
}

}  // namespace

std::vector<Composition> palindromic_compositions(int total, std::optional<int> max_part,
                                                  std::optional<int> max_parts) {
  if (total < 0) throw Error(Errc::invalid_argument, "negative total");
  std::vector<int> half;
  std::vector<Composition> out;
  palindromes_rec(total, max_part, max_parts, half, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_palindromic_compositions(int total, std::optional<int> max_part, std::optional<int> max_parts) {
  return palindromic_compositions(total, max_part, max_parts).size();
}

int es_bound(int k, int j, bool is_signed) {
  if (k < 1 || j < 1) throw Error(Errc::invalid_argument, "es_bound needs k, j >= 1");
  return is_signed ? (k * j) / 2 : k * j;
}

BigInt es_extremal_count(int k, int j, bool is_signed) {
  if (k < 1 || j < 1) throw Error(Errc::invalid_argument, "es_extremal_count needs k, j >= 1");
  if (!is_signed) {
    const BigInt t = syt_count(Partition::rectangle(j, k));
    return t * t;
  }
  BigInt t;
  if ((k * j) % 2 == 0) {
    t = domino_count(Partition::rectangle(j, k));
  } else {
    std::vector<int> parts(static_cast<std::size_t>(j - 1), k);
    parts.push_back(k - 1);
    t = domino_count(Partition::from(parts));
  }
  return t * t;
}

Permutation increasing_pattern(std::size_t m) { return Permutation::identity(m); }

Permutation decreasing_pattern(std::size_t m) {
  std::vector<int> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = static_cast<int>(m - i);
  return Permutation::from(values);
}

const char* mode_name(CountMode mode) { return mode == CountMode::global ? "global" : "classical"; }

// ---------------------------------------------------------------------------
// Counting engine

std::uint64_t parallel_count(std::size_t n, const std::function<bool(const SignedPermutation&)>& keep,
                             unsigned jobs) {
  if (n > kMaxSignedSize) throw Error(Errc::size_cap_exceeded, "n too large");
  if (n == 0) return keep(SignedPermutation{}) ? 1 : 0;
  // Branch b covers the elements with w(1) = b - n (b < n) or b - n + 1.
  const int branches = static_cast<int>(2 * n);
  std::vector<std::uint64_t> per_branch(static_cast<std::size_t>(branches), 0);
  std::atomic<int> next_branch{0};
  auto worker = [&] {
    for (int b = next_branch++; b < branches; b = next_branch++) {
      const int first = b < static_cast<int>(n) ? b - static_cast<int>(n) : b - static_cast<int>(n) + 1;
      SignedPermutationEnumerator walker(n, first);
      SignedPermutation w;
      std::uint64_t count = 0;
      while (walker.next(w)) count += keep(w) ? 1 : 0;
      per_branch[static_cast<std::size_t>(b)] = count;
    }
  };
  const unsigned workers = std::clamp(jobs, 1u, static_cast<unsigned>(branches));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return std::accumulate(per_branch.begin(), per_branch.end(), std::uint64_t{0});
}

std::uint64_t count_gav(std::size_t n, const GlobalPatternSet& set, unsigned jobs) {
  return parallel_count(n, [&set](const SignedPermutation& w) { return globally_avoids(w, set); }, jobs);
}

std::uint64_t count_classical(std::size_t n, const SignedPatternSet& set, unsigned jobs) {
  return parallel_count(n, [&set](const SignedPermutation& w) { return classically_avoids(w, set); }, jobs);
}

const char* provenance_name(SequenceTable::Provenance p) {
  return p == SequenceTable::Provenance::formula ? "formula" : "brute-force";
}

std::string to_csv(const SequenceTable& table) {
  std::string out = "n,count\n";
  for (const auto& [n, count] : table.rows) out += std::to_string(n) + "," + count.str() + "\n";
  return out;
}

std::string to_json(const SequenceTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, count] : table.rows) rows.push_back({{"n", n}, {"count", count.str()}});
  nlohmann::json doc = {{"label", table.label}, {"provenance", provenance_name(table.provenance)}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Memo cache

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    const auto cut = line.rfind('|');
    if (cut == std::string::npos) continue;
    try {
      entries_[line.substr(0, cut)] = BigInt(line.substr(cut + 1));
    } catch (const std::exception&) {
      // Unparseable count: drop the record, it is recomputed on demand.
    }
  }
}

CountCache CountCache::from_environment() {
  const char* env = std::getenv("BPERM_CACHE");
  if (env == nullptr || *env == '\0') return {};
  return CountCache(env);
}

std::string CountCache::key(const std::string& patterns, CountMode mode, int n) {
  return patterns + "|" + mode_name(mode) + "|" + std::to_string(n);
}

std::optional<BigInt> CountCache::lookup(const std::string& patterns, CountMode mode, int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key(patterns, mode, n)); it != entries_.end()) return it->second;
  return std::nullopt;
}

void CountCache::store(const std::string& patterns, CountMode mode, int n, const BigInt& count) {
  std::lock_guard lock(mutex_);
  entries_[key(patterns, mode, n)] = count;
  dirty_ = true;
}

void CountCache::flush() const {
  std::lock_guard lock(mutex_);
  if (path_.empty() || !dirty_) return;
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    for (const auto& [k, v] : entries_) out << k << '|' << v.str() << '\n';
    if (!out) throw Error(Errc::io_error, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw Error(Errc::io_error, "cannot rename " + tmp.string() + ": " + ec.message());
}

namespace {

template <class Counter>
SequenceTable build_table(const std::string& label, CountMode mode, int n_min, int n_max, CountCache* cache,
                          Counter&& counter) {
  if (n_min < 0 || n_max < n_min) throw Error(Errc::invalid_argument, "bad n range");
  if (static_cast<std::size_t>(n_max) > kMaxSequenceSize) {
    throw Error(Errc::size_cap_exceeded, "n > " + std::to_string(kMaxSequenceSize) + " is not supported");
  }
  SequenceTable table;
  table.label = label;
  for (int n = n_min; n <= n_max; ++n) {
    std::optional<BigInt> cached = cache ? cache->lookup(label, mode, n) : std::nullopt;
    BigInt count = cached ? *cached : BigInt(counter(static_cast<std::size_t>(n)));
    if (cache && !cached) cache->store(label, mode, n, count);
    table.rows.emplace_back(n, count);
  }
  return table;
}

}  // namespace

SequenceTable sequence(const GlobalPatternSet& set, int n_min, int n_max, unsigned jobs, CountCache* cache) {
  return build_table(to_string(set), CountMode::global, n_min, n_max, cache,
                     [&](std::size_t n) { return count_gav(n, set, jobs); });
}

SequenceTable sequence_classical(const SignedPatternSet& set, int n_min, int n_max, unsigned jobs,
                                 CountCache* cache) {
  return build_table(to_string(set), CountMode::classical, n_min, n_max, cache,
                     [&](std::size_t n) { return count_classical(n, set, jobs); });
}

std::uint64_t unsigned_avoider_count(std::size_t n, const std::vector<Permutation>& patterns) {
  if (n > kMaxUnsignedCountSize) {
    throw Error(Errc::size_cap_exceeded, "n > " + std::to_string(kMaxUnsignedCountSize) + " is not supported");
  }
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::uint64_t total = 0;
  Word word;
  do {
    word.clear();
    for (int x : values) word.push_back(static_cast<Letter>(x));
    const bool avoids = std::none_of(patterns.begin(), patterns.end(),
                                     [&](const Permutation& p) { return word_contains(word.span(), p.word()); });
    total += avoids ? 1 : 0;
  } while (std::next_permutation(values.begin(), values.end()));
  return total;
}

}  // namespace bperm
