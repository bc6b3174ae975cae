#pragma once

// Closed-form counts, composition counting, Erdos-Szekeres extremal values and
// the parallel brute-force counting engine behind every sequence table.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bperm/bigint.hpp"
#include "bperm/classes.hpp"
#include "bperm/patterns.hpp"

namespace bperm {

inline constexpr std::size_t kMaxSequenceSize = 8;
inline constexpr std::size_t kMaxUnsignedCountSize = 9;

// f^(k)_i: 1 at i = floor(k/2) + 1, 0 at the other i <= k, then each term is
// the sum of the previous k terms.
BigInt fib_like(int k, int i);

BigInt count_gav_132_and_increasing(int n, int k);
BigInt count_gav_132_and_decreasing(int n, int k);

std::vector<Composition> palindromic_compositions(int total, std::optional<int> max_part = std::nullopt,
                                                  std::optional<int> max_parts = std::nullopt);
BigInt count_palindromic_compositions(int total, std::optional<int> max_part = std::nullopt,
                                      std::optional<int> max_parts = std::nullopt);

int es_bound(int k, int j, bool is_signed);
// Unsigned: SYT count of the j x k rectangle squared. Signed: squared domino
// count of the j x k rectangle (kj even) or of (k, ..., k, k - 1) (kj odd).
BigInt es_extremal_count(int k, int j, bool is_signed);

// 1 2 ... m and m ... 2 1.
Permutation increasing_pattern(std::size_t m);
Permutation decreasing_pattern(std::size_t m);

enum class CountMode { global, classical };
const char* mode_name(CountMode mode);

// Counts w in B_n with keep(w), splitting B_n by w(1) across `jobs` workers.
// The result does not depend on `jobs`.
std::uint64_t parallel_count(std::size_t n, const std::function<bool(const SignedPermutation&)>& keep,
                             unsigned jobs);

std::uint64_t count_gav(std::size_t n, const GlobalPatternSet& set, unsigned jobs = 1);
std::uint64_t count_classical(std::size_t n, const SignedPatternSet& set, unsigned jobs = 1);

struct SequenceTable {
  enum class Provenance { formula, brute_force };

  std::string label;
  std::vector<std::pair<int, BigInt>> rows;
  Provenance provenance = Provenance::brute_force;

  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

const char* provenance_name(SequenceTable::Provenance p);
std::string to_csv(const SequenceTable& table);
std::string to_json(const SequenceTable& table);

// Memo of brute-force counts, one "patterns|mode|n|count" record per line.
class CountCache {
 public:
  CountCache() = default;
  explicit CountCache(std::filesystem::path path);

  // Cache named by $BPERM_CACHE, or a disabled cache when unset.
  static CountCache from_environment();

  bool enabled() const { return !path_.empty(); }
  std::optional<BigInt> lookup(const std::string& patterns, CountMode mode, int n) const;
  void store(const std::string& patterns, CountMode mode, int n, const BigInt& count);
  // Rewrites the whole file through a temporary and a rename.
  void flush() const;

 private:
  static std::string key(const std::string& patterns, CountMode mode, int n);

  std::filesystem::path path_;
  std::map<std::string, BigInt> entries_;
  mutable std::mutex mutex_;
  bool dirty_ = false;
};

SequenceTable sequence(const GlobalPatternSet& set, int n_min, int n_max, unsigned jobs = 1,
                       CountCache* cache = nullptr);
SequenceTable sequence_classical(const SignedPatternSet& set, int n_min, int n_max, unsigned jobs = 1,
                                 CountCache* cache = nullptr);

std::uint64_t unsigned_avoider_count(std::size_t n, const std::vector<Permutation>& patterns);

}  // namespace bperm
