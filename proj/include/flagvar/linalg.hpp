#pragma once

#include <compare>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "flagvar/gf.hpp"

namespace flagvar {

/// Dense row-major matrix over a finite field. Vectors are rows when they
/// span subspaces; a matrix acts on column vectors.
class Mat {
 public:
  Mat(Field f, int rows, int cols);
  Mat(Field f, int rows, int cols, std::vector<Elem> entries);
  static Mat identity(const Field& f, int n);
  /// Builds a matrix from small integers, reduced into the prime field.
  static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Elem operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Elem> row(int r) const {
    return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Elem>& entries() const { return a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;

  /// m * v for a column vector v.
  std::vector<Elem> apply(std::span<const Elem> v) const;
  Mat transpose() const;
  Mat pow(int e) const;
  /// Entry-wise a -> a^q.
  Mat frobenius() const;
  bool is_rational() const;
  bool is_zero() const;
  std::optional<Mat> inverse() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Mat rref;
  int rank;
  std::vector<int> pivots;
};

/// Reduced row-echelon form and rank.
RrefResult rref_rank(const Mat& m);

/// Incrementally maintained reduced echelon basis.
class EchelonBasis {
 public:
  EchelonBasis(Field f, int ambient);

  /// Adds v to the span; returns false when v was already in it.
  bool insert(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Reduces v in place against the basis.
  void reduce(std::vector<Elem>& v) const;
  /// Current basis as an RREF matrix (rows sorted by pivot).
  Mat to_rref() const;

 private:
  Field field_;
  int n_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> pivot_of_row_;
};

/// Subspace of F^n stored by its canonical RREF basis.
class Subspace {
 public:
  static Subspace zero(const Field& f, int n);
  static Subspace full(const Field& f, int n);
  /// Span of the rows of m.
  static Subspace span(const Mat& rows);
  /// Span of the first `count` standard basis vectors.
  static Subspace coordinate(const Field& f, int n, int count);

  int dim() const { return basis_.rows(); }
  int ambient_dim() const { return basis_.cols(); }
  const Field& field() const { return basis_.field(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& s) const;
  Subspace frobenius() const;
  bool is_rational() const { return basis_.is_rational(); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  Subspace(Mat basis, std::vector<int> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);

/// Moves a matrix with GF(q)-rational entries into another field with the
/// same p and m. Throws std::invalid_argument on non-rational entries.
Mat change_field(const Mat& m, const Field& to);

/// All subspaces of F^n of dimension d, in order of pivot set then entries.
std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int d);

/// Number of d-subspaces of F_Q^n.
std::uint64_t gaussian_binomial(int n, int d, std::uint64_t Q);

/// Uniform invertible n x n matrix with GF(q)-rational entries, by rejection.
Mat random_rational_invertible(const Field& f, int n, std::mt19937_64& rng);
/// Uniform matrix with GF(q)-rational entries.
Mat random_rational(const Field& f, int rows, int cols, std::mt19937_64& rng);

}  // namespace flagvar
