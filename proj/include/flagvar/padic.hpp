#pragma once

#include <cstdint>
#include <optional>

#include "flagvar/flag_geometry.hpp"

namespace flagvar {

/// Element A_0 + A_1 pi + ... + A_{r-1} pi^{r-1} of M_d(F[pi]/pi^r).
class TruncatedSeriesMat {
 public:
  explicit TruncatedSeriesMat(std::vector<Mat> coeffs);
  static TruncatedSeriesMat identity(const Field& f, int d, int r);
  /// a * I_d in degree zero.
  static TruncatedSeriesMat scalar(const Field& f, int d, int r, Elem a);

  int d() const { return coeffs_.front().rows(); }
  int r() const { return static_cast<int>(coeffs_.size()); }
  const Field& field() const { return coeffs_.front().field(); }
  const Mat& coeff(int i) const { return coeffs_[i]; }
  const std::vector<Mat>& coeffs() const { return coeffs_; }

  bool is_unit() const;
  /// Two-sided inverse; nullopt when A_0 is singular.
  std::optional<TruncatedSeriesMat> inverse() const;
  bool is_rational() const;

  TruncatedSeriesMat operator+(const TruncatedSeriesMat& o) const;
  TruncatedSeriesMat operator*(const TruncatedSeriesMat& o) const;
  bool operator==(const TruncatedSeriesMat& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Mat> coeffs_;
};

/// Block upper triangular Toeplitz matrix with A_{j-i} in block (i, j).
Mat embed(const TruncatedSeriesMat& a);

/// embed(a) commutes with the Weyr form of the rectangular partition.
/// Throws std::invalid_argument for non-rectangular lambda or a size
/// mismatch with d * r.
bool centralizer_check(const Partition& lambda, const TruncatedSeriesMat& a);

/// embed(g) . f. Throws std::invalid_argument when g is not a unit or has
/// non-rational coefficients.
Flag act_on_flag(const TruncatedSeriesMat& g, const Flag& f);

inline constexpr int kDefaultOrderCap = 4096;

/// Smallest s >= 1 with g^s = 1; throws BudgetExceeded past cap.
int multiplicative_order(const TruncatedSeriesMat& g, int cap = kDefaultOrderCap);

/// Number of flags f in B_{W(u),w} with embed(g) . F^k(f) = f, where u has
/// the rectangular Jordan type lambda = (r, ..., r) (d parts). Such flags are
/// rational over GF(q^{k * ord(g)}) and are enumerated there.
std::uint64_t lefschetz_count(const Partition& lambda, const Perm& w, const TruncatedSeriesMat& g, int k,
                              const EnumerationOptions& opts = {});

}  // namespace flagvar
