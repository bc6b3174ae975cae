#pragma once

// Partitions, standard Young tableaux counts, Robinson-Schensted shapes and
// Greene statistics, standard domino tableaux, higher-dimensional Catalan
// numbers.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bperm/bigint.hpp"
#include "bperm/core.hpp"

namespace bperm {

class Partition {
 public:
  Partition() = default;

  // Trailing zero parts are dropped; anything else out of order is an error.
  static Partition from(std::vector<int> parts);
  static Partition from(std::initializer_list<int> parts) { return from(std::vector<int>(parts)); }
  static Partition rectangle(int rows, int columns);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& shape);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

BigInt syt_count(const Partition& shape);

Partition rs_shape(std::span<const Letter> word);
Partition rs_shape(const Permutation& v);
std::size_t lis(std::span<const Letter> word);
std::size_t lds(std::span<const Letter> word);
Partition shape_of_signed(const SignedPermutation& w);

struct Domino {
  int label = 0;
  int row = 0;     // 0-based, top row first
  int column = 0;  // 0-based
  bool vertical = false;

  friend bool operator==(const Domino&, const Domino&) = default;
};

struct DominoTableau {
  Partition shape;
  std::vector<Domino> dominoes;  // dominoes[i] carries label i + 1

  // Label grid, one string per row, cells separated by spaces.
  std::vector<std::string> render() const;
  friend bool operator==(const DominoTableau&, const DominoTableau&) = default;
};

// Visits every standard domino tableau of the shape once, in label order
// (domino i is added to a Young diagram formed by dominoes 1..i-1).
void for_each_domino_tableau(const Partition& shape, const std::function<void(const DominoTableau&)>& visit);
std::vector<DominoTableau> domino_tableaux(const Partition& shape);
BigInt domino_count(const Partition& shape);

// Empty 2-core, found by peeling border dominoes.
bool is_domino_tileable(const Partition& shape);

BigInt catalan_multidim(int j, int k);

}  // namespace bperm
