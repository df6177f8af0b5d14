#include "flagvar/padic.hpp"

#include <memory>

#include "flagvar/normal_forms.hpp"

namespace flagvar {

TruncatedSeriesMat::TruncatedSeriesMat(std::vector<Mat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least one coefficient");
  const int d = coeffs_.front().rows();
  for (const auto& a : coeffs_) {
    if (a.rows() != d || a.cols() != d) throw std::invalid_argument("series coefficients must all be d x d");
    if (!(a.field() == coeffs_.front().field())) throw std::invalid_argument("series coefficients over different fields");
  }
}

TruncatedSeriesMat TruncatedSeriesMat::identity(const Field& f, int d, int r) {
  return scalar(f, d, r, 1);
}

TruncatedSeriesMat TruncatedSeriesMat::scalar(const Field& f, int d, int r, Elem a) {
  if (r < 1) throw std::invalid_argument("truncation order must be >= 1");
  std::vector<Mat> c(r, Mat(f, d, d));
  for (int i = 0; i < d; ++i) c[0](i, i) = a;
  return TruncatedSeriesMat(std::move(c));
}

bool TruncatedSeriesMat::is_unit() const { return coeffs_.front().inverse().has_value(); }

std::optional<TruncatedSeriesMat> TruncatedSeriesMat::inverse() const {
  const auto a0_inv = coeffs_.front().inverse();
  if (!a0_inv) return std::nullopt;
  // b_j = -A_0^-1 (A_1 b_{j-1} + ... + A_j b_0)
  std::vector<Mat> b{*a0_inv};
  for (int j = 1; j < r(); ++j) {
    Mat acc(field(), d(), d());
    for (int i = 1; i <= j; ++i) acc = acc + coeffs_[i] * b[j - i];
    b.push_back(Mat(field(), d(), d()) - *a0_inv * acc);
  }
  return TruncatedSeriesMat(std::move(b));
}

bool TruncatedSeriesMat::is_rational() const {
  for (const auto& a : coeffs_)
    if (!a.is_rational()) return false;
  return true;
}

TruncatedSeriesMat TruncatedSeriesMat::operator+(const TruncatedSeriesMat& o) const {
  if (r() != o.r()) throw std::invalid_argument("series of different truncation order");
  std::vector<Mat> c;
  for (int i = 0; i < r(); ++i) c.push_back(coeffs_[i] + o.coeffs_[i]);
  return TruncatedSeriesMat(std::move(c));
}

TruncatedSeriesMat TruncatedSeriesMat::operator*(const TruncatedSeriesMat& o) const {
  if (r() != o.r()) throw std::invalid_argument("series of different truncation order");
  std::vector<Mat> c(r(), Mat(field(), d(), d()));
  for (int i = 0; i < r(); ++i)
    for (int j = 0; i + j < r(); ++j) c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  return TruncatedSeriesMat(std::move(c));
}

Mat embed(const TruncatedSeriesMat& a) {
  const int d = a.d(), r = a.r();
  Mat out(a.field(), d * r, d * r);
  for (int bi = 0; bi < r; ++bi)
    for (int bj = bi; bj < r; ++bj) {
      const Mat& block = a.coeff(bj - bi);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(bi * d + i, bj * d + j) = block(i, j);
    }
  return out;
}

namespace {

void require_rectangular(const Partition& lambda, const TruncatedSeriesMat& a) {
  if (!lambda.is_rectangular()) throw std::invalid_argument("partition is not rectangular");
  if (lambda.length() != a.d() || lambda.parts().front() != a.r())
    throw std::invalid_argument("series shape (d, r) does not match the rectangular partition");
}

void require_rational_unit(const TruncatedSeriesMat& g) {
  if (!g.is_unit()) throw std::invalid_argument("series is not a unit (A_0 singular)");
  if (!g.is_rational()) throw std::invalid_argument("series coefficients are not in the base field GF(q)");
}

}  // namespace

bool centralizer_check(const Partition& lambda, const TruncatedSeriesMat& a) {
  require_rectangular(lambda, a);
  const Mat x = embed(a);
  const Mat w = weyr_matrix(lambda, a.field());
  return x * w == w * x;
}

Flag act_on_flag(const TruncatedSeriesMat& g, const Flag& f) {
  require_rational_unit(g);
  return f.translate(change_field(embed(g), f.field()));
}

int multiplicative_order(const TruncatedSeriesMat& g, int cap) {
  if (!g.is_unit()) throw std::invalid_argument("series is not a unit (A_0 singular)");
  const Mat x = embed(g);
  const Mat one = Mat::identity(x.field(), x.rows());
  Mat cur = x;
  for (int s = 1; s <= cap; ++s) {
    if (cur == one) return s;
    cur = cur * x;
  }
  throw BudgetExceeded("multiplicative order", static_cast<std::uint64_t>(cap) + 1, static_cast<std::uint64_t>(cap));
}

std::uint64_t lefschetz_count(const Partition& lambda, const Perm& w, const TruncatedSeriesMat& g, int k,
                              const EnumerationOptions& opts) {
  require_rectangular(lambda, g);
  require_rational_unit(g);
  if (w.size() != lambda.size()) throw std::invalid_argument("permutation degree differs from d * r");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int order = multiplicative_order(g);
  const Field& src = g.field();
  const Field big = Field::make(src.p(), src.m(), k * order);
  const Mat gm = change_field(embed(g), big);
  auto action = std::make_shared<const UnipotentAction>(weyr_matrix(lambda, big));
  const auto o = with_filter(opts, [action](const Subspace& s) { return action->stabilises(s); });
  return count_flags_if(lambda.size(), big, [&](const Flag& f) {
    if (!action->stabilises(f) || !dl_membership(w, f)) return false;
    return f.frobenius(k).translate(gm) == f;
  }, o);
}

}  // namespace flagvar
