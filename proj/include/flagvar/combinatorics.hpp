#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace flagvar {

/// Weakly decreasing list of positive parts r_1 >= r_2 >= ... >= r_d.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  /// Column lengths c_1, ..., c_{r_1}.
  std::vector<int> conjugate() const;
  bool is_rectangular() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::vector<int> conjugate_partition(const Partition& lambda);
/// Partition whose column lengths are `columns` (must be weakly decreasing).
Partition partition_from_columns(const std::vector<int>& columns);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Standard Young tableau; rows are listed top to bottom.
class Tableau {
 public:
  /// Throws std::invalid_argument unless the rows form a standard tableau
  /// filled with 1..n.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  /// 1-indexed (row, column) of the entry v.
  std::pair<int, int> position(int v) const;

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  auto operator<=>(const Tableau& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// Permutation of 1..n in word notation w(1) ... w(n).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> word);
  static Perm identity(int n);
  /// w_0 = n ... 1.
  static Perm longest(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  /// Number of inversions.
  int length() const;
  Perm inverse() const;
  bool is_involution() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> word_;
};

/// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
/// All of S_n in lexicographic word order.
std::vector<Perm> all_permutations(int n);

/// Fills column i top to bottom with the next c_i integers.
Tableau column_superstandard_tableau(const Partition& lambda);

/// w(P, Q): reverse bumping, driven by the position of the largest entry of Q.
Perm rs_extract(const Tableau& P, const Tableau& Q);
/// Schensted row insertion: returns (insertion tableau, recording tableau).
std::pair<Tableau, Tableau> rs_insert(const Perm& w);

/// Product of the reversions of the columns of the column-superstandard
/// tableau of lambda: block j of c_j consecutive letters, reversed.
Perm beta_word(const Partition& lambda);

struct BlockReversal {
  std::vector<int> sizes;
  bool weakly_decreasing = false;
};

/// Recognises w = [b_1 ... 1][...]...[... n], a concatenation of reversed
/// consecutive blocks. Returns nullopt when w has another shape.
std::optional<BlockReversal> parse_block_reversal(const Perm& w);

inline constexpr int kDefaultTableauCap = 10;

/// Every standard tableau of shape lambda. Order: lexicographic on the
/// sequence of rows receiving 1, 2, ..., n.
std::vector<Tableau> enumerate_standard_tableaux(const Partition& lambda, int cap = kDefaultTableauCap);

}  // namespace flagvar
