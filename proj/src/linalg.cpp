#include "flagvar/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace flagvar {

Mat::Mat(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Mat::Mat(Field f, int rows, int cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match matrix shape");
  for (Elem e : a_)
    if (e >= field_.size()) throw std::invalid_argument("matrix entry outside the field");
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  if (!(field_ == o.field_)) throw std::invalid_argument("matrices over different fields");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      const Elem a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(l, j)));
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  if (!(field_ == o.field_)) throw std::invalid_argument("matrices over different fields");
  Mat r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  if (!(field_ == o.field_)) throw std::invalid_argument("matrices over different fields");
  Mat r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

std::vector<Elem> Mat::apply(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Elem> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (int j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  Mat r = identity(field_, rows_);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Mat Mat::frobenius() const {
  Mat r(*this);
  for (Elem& e : r.a_) e = field_.frobenius(e);
  return r;
}

bool Mat::is_rational() const {
  return std::all_of(a_.begin(), a_.end(), [this](Elem e) { return field_.in_base_field(e); });
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = rows_;
  Mat aug(field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref_rank(aug);
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(red.pivots.size()) || red.pivots[i] != i) return std::nullopt;
  Mat inv(field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = red.rref(i, n + j);
  return inv;
}

RrefResult rref_rank(const Mat& m) {
  const Field& f = m.field();
  Mat a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Elem s = f.inv(a(r, c));
    for (int j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem factor = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

EchelonBasis::EchelonBasis(Field f, int ambient) : field_(std::move(f)), n_(ambient) {}

void EchelonBasis::reduce(std::vector<Elem>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = pivot_of_row_[r];
    const Elem factor = v[c];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (int j = c; j < n_; ++j) v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
  }
}

bool EchelonBasis::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool EchelonBasis::insert(std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length does not match ambient space");
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  int c = 0;
  while (c < n_ && w[c] == 0) ++c;
  if (c == n_) return false;
  const Elem s = field_.inv(w[c]);
  for (int j = c; j < n_; ++j) w[j] = field_.mul(w[j], s);
  for (auto& row : rows_) {
    const Elem factor = row[c];
    if (factor == 0) continue;
    for (int j = c; j < n_; ++j) row[j] = field_.sub(row[j], field_.mul(factor, w[j]));
  }
  rows_.push_back(std::move(w));
  pivot_of_row_.push_back(c);
  return true;
}

Mat EchelonBasis::to_rref() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  std::vector<Elem> entries;
  entries.reserve(rows_.size() * n_);
  for (auto i : order) entries.insert(entries.end(), rows_[i].begin(), rows_[i].end());
  return Mat(field_, static_cast<int>(rows_.size()), n_, std::move(entries));
}

Subspace Subspace::zero(const Field& f, int n) { return Subspace(Mat(f, 0, n), {}); }

Subspace Subspace::full(const Field& f, int n) { return coordinate(f, n, n); }

Subspace Subspace::coordinate(const Field& f, int n, int count) {
  if (count < 0 || count > n) throw std::invalid_argument("coordinate subspace dimension out of range");
  Mat b(f, count, n);
  std::vector<int> piv(count);
  for (int i = 0; i < count; ++i) {
    b(i, i) = 1;
    piv[i] = i;
  }
  return Subspace(std::move(b), std::move(piv));
}

Subspace Subspace::span(const Mat& rows) {
  auto red = rref_rank(rows);
  std::vector<Elem> entries(red.rref.entries().begin(),
                            red.rref.entries().begin() + static_cast<std::ptrdiff_t>(red.rank) * rows.cols());
  return Subspace(Mat(rows.field(), red.rank, rows.cols(), std::move(entries)), std::move(red.pivots));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) throw std::invalid_argument("vector length does not match ambient space");
  const Field& f = field();
  std::vector<Elem> w(v.begin(), v.end());
  for (int r = 0; r < dim(); ++r) {
    const int c = pivots_[r];
    const Elem factor = w[c];
    if (factor == 0) continue;
    for (int j = c; j < ambient_dim(); ++j) w[j] = f.sub(w[j], f.mul(factor, basis_(r, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_dim() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (s.dim() > dim()) return false;
  for (int r = 0; r < s.dim(); ++r)
    if (!contains(s.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::frobenius() const {
  // A field automorphism fixes 0 and 1, so the reduced echelon shape survives.
  return Subspace(basis_.frobenius(), pivots_);
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = ambient_dim() <=> o.ambient_dim(); c != 0) return c;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  const auto& a = basis_.entries();
  const auto& b = o.basis_.entries();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Subspace kernel(const Mat& m) {
  auto red = rref_rank(m);
  const Field& f = m.field();
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : red.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(f, static_cast<int>(free_cols.size()), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const int fc = free_cols[t];
    basis(static_cast<int>(t), fc) = 1;
    for (int i = 0; i < red.rank; ++i) basis(static_cast<int>(t), red.pivots[i]) = f.neg(red.rref(i, fc));
  }
  return Subspace::span(basis);
}

Subspace image(const Mat& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols()) throw std::invalid_argument("image: subspace does not live in the matrix domain");
  Mat rows(m.field(), s.dim(), m.rows());
  for (int r = 0; r < s.dim(); ++r) {
    const auto v = m.apply(s.basis().row(r));
    for (int j = 0; j < m.rows(); ++j) rows(r, j) = v[j];
  }
  return Subspace::span(rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const int n = a.ambient_dim();
  std::vector<Elem> entries(a.basis().entries());
  entries.insert(entries.end(), b.basis().entries().begin(), b.basis().entries().end());
  return Subspace::span(Mat(a.field(), a.dim() + b.dim(), n, std::move(entries)));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const int n = a.ambient_dim();
  // Zassenhaus: rows (a | a) and (b | 0); rows with vanishing left half span a cap b.
  Mat z(a.field(), a.dim() + b.dim(), 2 * n);
  for (int r = 0; r < a.dim(); ++r)
    for (int j = 0; j < n; ++j) {
      z(r, j) = a.basis()(r, j);
      z(r, n + j) = a.basis()(r, j);
    }
  for (int r = 0; r < b.dim(); ++r)
    for (int j = 0; j < n; ++j) z(a.dim() + r, j) = b.basis()(r, j);
  auto red = rref_rank(z);
  std::vector<Elem> entries;
  int count = 0;
  for (int i = 0; i < red.rank; ++i) {
    if (red.pivots[i] < n) continue;
    for (int j = 0; j < n; ++j) entries.push_back(red.rref(i, n + j));
    ++count;
  }
  return Subspace::span(Mat(a.field(), count, n, std::move(entries)));
}

bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

Mat change_field(const Mat& m, const Field& to) {
  if (m.field() == to) return m;
  const auto map = base_field_embedding(m.field(), to);
  std::vector<Elem> entries(m.entries().size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Elem e = map[m.entries()[i]];
    if (e == kNotRational) throw std::invalid_argument("matrix entry is not in the base field GF(q)");
    entries[i] = e;
  }
  return Mat(to, m.rows(), m.cols(), std::move(entries));
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("subspace dimension out of range");
  std::vector<Subspace> out;
  std::vector<int> piv(d);
  std::iota(piv.begin(), piv.end(), 0);
  const std::uint64_t size = f.size();
  while (true) {
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    for (int i = 0; i < d; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
    std::vector<Elem> vals(free_pos.size(), 0);
    auto advance = [&] {
      for (std::size_t t = vals.size(); t-- > 0;) {
        if (++vals[t] < size) return true;
        vals[t] = 0;
      }
      return false;
    };
    do {
      Mat b(f, d, n);
      for (int i = 0; i < d; ++i) b(i, piv[i]) = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t) b(free_pos[t].first, free_pos[t].second) = vals[t];
      out.push_back(Subspace::span(b));
    } while (advance());
    int i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::uint64_t gaussian_binomial(int n, int d, std::uint64_t Q) {
  if (d < 0 || d > n) return 0;
  unsigned __int128 result = 1;
  for (int i = 0; i < d; ++i) {
    unsigned __int128 num = 1, den = 1;
    for (int t = 0; t < n - i; ++t) num *= Q;
    for (int t = 0; t < i + 1; ++t) den *= Q;
    result = result * (num - 1) / (den - 1);
  }
  return static_cast<std::uint64_t>(result);
}

Mat random_rational(const Field& f, int rows, int cols, std::mt19937_64& rng) {
  const auto& base = f.base_elements();
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  Mat m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = base[pick(rng)];
  return m;
}

Mat random_rational_invertible(const Field& f, int n, std::mt19937_64& rng) {
  while (true) {
    Mat m = random_rational(f, n, n, rng);
    if (rref_rank(m).rank == n) return m;
  }
}

}  // namespace flagvar
