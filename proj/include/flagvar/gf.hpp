#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagvar {

/// Element of a finite field, encoded as sum c_i * p^i over its coefficient
/// vector (constant term first). Codes 0..p-1 are the prime-field elements.
using Elem = std::uint32_t;

namespace detail {
struct FieldTables;
}

/// The tower GF(p) <= GF(q) <= GF(q^k), q = p^m, realised as
/// GF(p)[x]/(f) with f the lexicographically smallest monic irreducible of
/// degree m*k (coefficients compared from the constant term up).
///
/// Field handles are cheap to copy; the arithmetic tables are shared and
/// immutable. GF(q) is the fixed field of the relative Frobenius a -> a^q.
class Field {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

  /// Throws std::invalid_argument for non-prime p, m < 1, k < 1, or
  /// p^(m*k) above size_cap.
  static Field make(int p, int m, int k, std::uint64_t size_cap = kDefaultSizeCap);

  int p() const;
  int m() const;
  int k() const;
  int degree() const;            // m*k
  std::uint64_t size() const;    // p^(m*k)
  std::uint64_t q() const;       // p^m
  const std::vector<int>& modulus() const;  // m*k+1 coefficients, monic

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// a -> a^q.
  Elem frobenius(Elem a) const;
  /// a -> a^(q^times).
  Elem frobenius(Elem a, int times) const;
  bool in_base_field(Elem a) const;

  /// Image of an integer under Z -> GF(p).
  Elem from_int(long long v) const;
  /// The class of x.
  Elem generator() const;
  /// A generator of the multiplicative group.
  Elem primitive_element() const;

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const int> c) const;

  /// Codes of GF(q) inside this field, ascending.
  const std::vector<Elem>& base_elements() const;

  bool operator==(const Field& o) const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(long long n);

/// Maps the GF(q)-elements of `from` into `to` (same p and m). The
/// returned vector is indexed by codes of `from`; entries for elements
/// outside GF(q) are set to kNotRational.
inline constexpr Elem kNotRational = 0xffffffffu;
std::vector<Elem> base_field_embedding(const Field& from, const Field& to);

/// Value type wrapping an element together with its field.
class Scalar {
 public:
  Scalar(Field f, Elem v);

  const Field& field() const { return field_; }
  Elem code() const { return v_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;
  Scalar frobenius() const;
  bool in_base_field() const { return field_.in_base_field(v_); }
  std::vector<int> coeffs() const { return field_.coeffs(v_); }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }

 private:
  void check_same(const Scalar& o) const;
  Field field_;
  Elem v_;
};

}  // namespace flagvar
