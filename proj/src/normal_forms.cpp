#include "flagvar/normal_forms.hpp"

#include <stdexcept>

namespace flagvar {

void require_rational_unipotent(const Mat& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unipotent matrix must be square");
  if (!u.is_rational()) throw std::invalid_argument("matrix entries are not in the base field GF(q)");
  const Mat nil = u - Mat::identity(u.field(), u.rows());
  if (!nil.pow(u.rows()).is_zero()) throw std::invalid_argument("matrix is not unipotent");
}

namespace {

// dim Ker N^t for t = 0, 1, ... until it reaches n.
std::vector<int> kernel_dims(const Mat& nil) {
  const int n = nil.rows();
  std::vector<int> dims{0};
  Mat power = Mat::identity(nil.field(), n);
  while (dims.back() < n) {
    power = power * nil;
    dims.push_back(n - rref_rank(power).rank);
  }
  return dims;
}

}  // namespace

UnipotentData analyze_unipotent(const Mat& u) {
  require_rational_unipotent(u);
  Mat nil = u - Mat::identity(u.field(), u.rows());
  const auto dims = kernel_dims(nil);
  std::vector<int> columns;
  for (std::size_t t = 1; t < dims.size(); ++t) columns.push_back(dims[t] - dims[t - 1]);
  Partition jordan = partition_from_columns(columns);
  return {u, std::move(nil), std::move(jordan), std::move(columns)};
}

Partition jordan_type(const Mat& u) { return analyze_unipotent(u).jordan; }

Mat weyr_matrix(const Partition& lambda, const Field& f) {
  const auto c = lambda.conjugate();
  const int n = lambda.size();
  Mat w = Mat::identity(f, n);
  int offset = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const int next_offset = offset + c[i];
    for (int a = 0; a < c[i + 1]; ++a) w(offset + a, next_offset + a) = 1;
    offset = next_offset;
  }
  return w;
}

Mat jordan_matrix(const Partition& lambda, const Field& f) {
  const int n = lambda.size();
  Mat j = Mat::identity(f, n);
  int offset = 0;
  for (int r : lambda.parts()) {
    for (int i = 0; i + 1 < r; ++i) j(offset + i, offset + i + 1) = 1;
    offset += r;
  }
  return j;
}

Mat weyr_conjugator(const Mat& u) {
  const auto data = analyze_unipotent(u);
  const Mat& nil = data.nilpotent;
  const Field& f = u.field();
  const int n = u.rows();
  const int depth = static_cast<int>(data.columns.size());

  std::vector<Subspace> kernels{Subspace::zero(f, n)};
  Mat power = Mat::identity(f, n);
  for (int t = 1; t <= depth; ++t) {
    power = power * nil;
    kernels.push_back(kernel(power));
  }

  struct Chain {
    std::vector<Elem> top;
    int length;
  };
  std::vector<Chain> chains;
  auto level_vector = [&](const Chain& ch, int t) {
    std::vector<Elem> v = ch.top;
    for (int s = 0; s < ch.length - t; ++s) v = nil.apply(v);
    return v;
  };

  for (int t = depth; t >= 1; --t) {
    EchelonBasis span(f, n);
    for (int r = 0; r < kernels[t - 1].dim(); ++r) span.insert(kernels[t - 1].basis().row(r));
    for (const auto& ch : chains) span.insert(level_vector(ch, t));
    for (int r = 0; r < kernels[t].dim(); ++r) {
      const auto v = kernels[t].basis().row(r);
      if (span.insert(v)) chains.push_back({std::vector<Elem>(v.begin(), v.end()), t});
    }
  }

  Mat g(f, n, n);
  int col = 0;
  for (int t = 1; t <= depth; ++t) {
    for (const auto& ch : chains) {
      if (ch.length < t) continue;
      const auto v = level_vector(ch, t);
      for (int i = 0; i < n; ++i) g(i, col) = v[i];
      ++col;
    }
  }
  if (col != n) throw std::logic_error("Jordan chain basis has the wrong size");
  return g;
}

int centralizer_dim(const Mat& u) {
  require_rational_unipotent(u);
  const int n = u.rows();
  const Field& f = u.field();
  Mat system(f, n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int eq = i * n + j;
      for (int l = 0; l < n; ++l) {
        // (uX)_{ij} = sum_l u_{il} X_{lj};  (Xu)_{ij} = sum_l X_{il} u_{lj}
        system(eq, l * n + j) = f.add(system(eq, l * n + j), u(i, l));
        system(eq, i * n + l) = f.sub(system(eq, i * n + l), u(l, j));
      }
    }
  }
  return n * n - rref_rank(system).rank;
}

Perm beta_of_unipotent(const Mat& u) { return beta_word(jordan_type(u)); }

}  // namespace flagvar
