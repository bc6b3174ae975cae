#include "bperm/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace bperm {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Partition Partition::from(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw Error(Errc::invalid_argument, "parts must be positive and weakly decreasing");
    }
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

Partition Partition::rectangle(int rows, int columns) {
  if (rows < 0 || columns < 0) throw Error(Errc::invalid_argument, "negative rectangle side");
  if (columns == 0) return {};
  return from(std::vector<int>(static_cast<std::size_t>(rows), columns));
}

int Partition::size() const {
  int total = 0;
  for (int x : parts_) total += x;
  return total;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(Errc::parse_error, "bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    start = end + 1;
  }
  return Partition::from(std::move(parts));
}

std::string to_string(const Partition& shape) {
  std::string out;
  for (int x : shape.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from(current));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

BigInt syt_count(const Partition& shape) {
  const auto& parts = shape.parts();
  std::vector<int> column_heights(static_cast<std::size_t>(shape.first()), 0);
  for (int len : parts) {
    for (int c = 0; c < len; ++c) ++column_heights[static_cast<std::size_t>(c)];
  }
  BigInt hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      const int arm = parts[r] - c - 1;
      const int leg = column_heights[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  }
  const BigInt total = factorial(static_cast<unsigned>(shape.size()));
  if (total % hooks != 0) throw Error(Errc::invalid_argument, "hook product does not divide n!");
  return total / hooks;
}

Partition rs_shape(std::span<const Letter> word) {
  std::vector<std::vector<Letter>> rows;
  for (Letter x : word) {
    Letter carry = x;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        break;
      }
      std::swap(*it, carry);
    }
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition::from(std::move(parts));
}

Partition rs_shape(const Permutation& v) { return rs_shape(v.word()); }

std::size_t lis(std::span<const Letter> word) {
  std::vector<Letter> tails;
  for (Letter x : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

std::size_t lds(std::span<const Letter> word) {
  std::vector<Letter> negated;
  for (Letter x : word) negated.push_back(static_cast<Letter>(-x));
  return lis(negated);
}

Partition shape_of_signed(const SignedPermutation& w) { return rs_shape(iota(w)); }

// ---------------------------------------------------------------------------
// Domino tableaux

std::vector<std::string> DominoTableau::render() const {
  std::vector<std::vector<int>> grid;
  for (int len : shape.parts()) grid.emplace_back(static_cast<std::size_t>(len), 0);
  for (const auto& d : dominoes) {
    grid[static_cast<std::size_t>(d.row)][static_cast<std::size_t>(d.column)] = d.label;
    if (d.vertical) {
      grid[static_cast<std::size_t>(d.row + 1)][static_cast<std::size_t>(d.column)] = d.label;
    } else {
      grid[static_cast<std::size_t>(d.row)][static_cast<std::size_t>(d.column + 1)] = d.label;
    }
  }
  std::vector<std::string> out;
  for (const auto& row : grid) {
    std::string line;
    for (int label : row) {
      if (!line.empty()) line += ' ';
      line += std::to_string(label);
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

struct DominoWalker {
  const Partition& target;
  const std::function<void(const DominoTableau&)>& visit;
  std::vector<int> filled;  // current row lengths
  DominoTableau current;
  int total_dominoes;

  int target_row(std::size_t r) const { return target[r]; }
  int filled_row(std::size_t r) const { return r < filled.size() ? filled[r] : 0; }

  void step(int label) {
    if (label > total_dominoes) {
      visit(current);
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      const int c = filled[r];
      const int above = r == 0 ? target.first() : filled[r - 1];
      // Horizontal domino at the end of row r.
      if (c + 2 <= target_row(r) && c + 2 <= above) {
        filled[r] += 2;
        current.dominoes.push_back({label, static_cast<int>(r), c, false});
        step(label + 1);
        current.dominoes.pop_back();
        filled[r] -= 2;
      }
      // Vertical domino in rows r, r + 1 at column c.
      if (r + 1 < filled.size() && filled[r + 1] == c && c + 1 <= target_row(r) && c + 1 <= target_row(r + 1) &&
          c + 1 <= above) {
        filled[r] += 1;
        filled[r + 1] += 1;
        current.dominoes.push_back({label, static_cast<int>(r), c, true});
        step(label + 1);
        current.dominoes.pop_back();
        filled[r] -= 1;
        filled[r + 1] -= 1;
      }
    }
  }
};

using ShapeMemo = std::map<std::vector<int>, BigInt>;

// Counts by removing the largest domino, which always sits on the border.
BigInt count_by_removal(std::vector<int>& rows, ShapeMemo& memo) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  BigInt total = 0;
  const std::vector<int> saved = rows;
  for (std::size_t r = 0; r < saved.size(); ++r) {
    const int below = r + 1 < saved.size() ? saved[r + 1] : 0;
    if (saved[r] - 2 >= below) {
      rows = saved;
      rows[r] -= 2;
      total += count_by_removal(rows, memo);
    }
    if (r + 1 < saved.size() && saved[r] == saved[r + 1]) {
      const int below2 = r + 2 < saved.size() ? saved[r + 2] : 0;
      if (saved[r + 1] - 1 >= below2) {
        rows = saved;
        rows[r] -= 1;
        rows[r + 1] -= 1;
        total += count_by_removal(rows, memo);
      }
    }
  }
  rows = saved;
  memo.emplace(saved, total);
  return total;
}

}  // namespace

void for_each_domino_tableau(const Partition& shape, const std::function<void(const DominoTableau&)>& visit) {
  if (shape.size() % 2 != 0) return;
  DominoWalker walker{shape, visit, std::vector<int>(shape.length(), 0), DominoTableau{shape, {}},
                      shape.size() / 2};
  walker.step(1);
}

std::vector<DominoTableau> domino_tableaux(const Partition& shape) {
  std::vector<DominoTableau> out;
  for_each_domino_tableau(shape, [&](const DominoTableau& t) { out.push_back(t); });
  return out;
}

BigInt domino_count(const Partition& shape) {
  if (shape.size() % 2 != 0) return 0;
  std::vector<int> rows = shape.parts();
  ShapeMemo memo;
  return count_by_removal(rows, memo);
}

bool is_domino_tileable(const Partition& shape) {
  std::vector<int> rows = shape.parts();
  bool removed = true;
  while (removed) {
    removed = false;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t r = 0; r < rows.size() && !removed; ++r) {
      const int below = r + 1 < rows.size() ? rows[r + 1] : 0;
      if (rows[r] - 2 >= below) {
        rows[r] -= 2;
        removed = true;
      } else if (r + 1 < rows.size() && rows[r] == rows[r + 1]) {
        const int below2 = r + 2 < rows.size() ? rows[r + 2] : 0;
        if (rows[r + 1] - 1 >= below2) {
          rows[r] -= 1;
          rows[r + 1] -= 1;
          removed = true;
        }
      }
    }
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows.empty();
}

BigInt catalan_multidim(int j, int k) {
  if (j < 1 || k < 1) throw Error(Errc::invalid_argument, "catalan_multidim needs j, k >= 1");
  auto superfactorial = [](int m) {
    BigInt out = 1;
    for (int i = 1; i <= m; ++i) out *= factorial(static_cast<unsigned>(i));
    return out;
  };
  const BigInt numerator = factorial(static_cast<unsigned>(k * j)) * superfactorial(j - 1) * superfactorial(k - 1);
  const BigInt denominator = superfactorial(k + j - 1);
  if (numerator % denominator != 0) throw Error(Errc::invalid_argument, "non-integral Catalan quotient");
  return numerator / denominator;
}

}  // namespace bperm
