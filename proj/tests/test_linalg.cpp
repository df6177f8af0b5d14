#include <stdexcept>
#include <random>
#include <set>

#include "doctest.h"
#include "flagvar/linalg.hpp"

using namespace flagvar;

namespace {

std::vector<Subspace> all_subspaces(const Field& f, int n) {
  std::vector<Subspace> out;
  for (int d = 0; d <= n; ++d)
    for (auto& s : enumerate_subspaces(f, n, d)) out.push_back(s);
  return out;
}

Subspace random_subspace(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rows(0, n);
  return Subspace::span(random_rational(f, rows(rng), n, rng));
}

}  // namespace

TEST_CASE("rref examples") {
  const Field f = Field::make(2, 1, 1);
  const Mat id = Mat::identity(f, 3);
  auto r = rref_rank(id);
  CHECK(r.rank == 3);
  CHECK(r.rref == id);
  auto z = rref_rank(Mat(f, 2, 3));
  CHECK(z.rank == 0);
  CHECK(z.rref.is_zero());
  auto h = rref_rank(Mat::from_ints(f, {{1, 1}, {1, 1}}));
  CHECK(h.rank == 1);
  CHECK(h.rref == Mat::from_ints(f, {{1, 1}, {0, 0}}));
  CHECK(h.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  std::mt19937_64 rng(7);
  for (const auto& f : {Field::make(2, 1, 1), Field::make(3, 1, 2), Field::make(5, 1, 1)}) {
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<int> dim(1, 5);
      const int rows = dim(rng), cols = dim(rng);
      Mat m(f, rows, cols);
      std::uniform_int_distribution<Elem> e(0, static_cast<Elem>(f.size() - 1));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = e(rng);
      const auto once = rref_rank(m);
      const auto twice = rref_rank(once.rref);
      CHECK(twice.rref == once.rref);
      CHECK(twice.rank == once.rank);
      CHECK(kernel(m).dim() + once.rank == cols);
      // kernel vectors really are annihilated
      const Subspace ker = kernel(m);
      for (int r = 0; r < ker.dim(); ++r) {
        const auto v = m.apply(ker.basis().row(r));
        for (Elem x : v) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("kernel and image examples") {
  const Field f = Field::make(2, 1, 1);
  CHECK(kernel(Mat::identity(f, 3)) == Subspace::zero(f, 3));
  CHECK(kernel(Mat(f, 3, 3)) == Subspace::full(f, 3));
  // N for the 4x4 Weyr form with two blocks of size 2
  const Mat n22 = Mat::from_ints(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(kernel(n22) == Subspace::coordinate(f, 4, 2));

  const Subspace s = Subspace::span(Mat::from_ints(f, {{1, 1, 0}, {0, 1, 1}}));
  CHECK(image(Mat::identity(f, 3), s) == s);
  CHECK(image(Mat(f, 3, 3), s) == Subspace::zero(f, 3));
  // N for the 3x3 Weyr form of (2,1): e3 -> e1
  const Mat n21 = Mat::from_ints(f, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  CHECK(image(n21, Subspace::full(f, 3)) == Subspace::coordinate(f, 3, 1));
  CHECK_THROWS_AS(image(Mat::identity(f, 2), s), std::invalid_argument);
}

TEST_CASE("lattice operations") {
  const Field f = Field::make(2, 1, 1);
  const Subspace e1 = Subspace::span(Mat::from_ints(f, {{1, 0}}));
  const Subspace e2 = Subspace::span(Mat::from_ints(f, {{0, 1}}));
  CHECK(intersect(e1, e2) == Subspace::zero(f, 2));
  CHECK(sum(e1, e2) == Subspace::full(f, 2));
  CHECK(intersect(e1, e1) == e1);
  CHECK(sum(e1, Subspace::zero(f, 2)) == e1);
  CHECK(contains(Subspace::full(f, 2), e1));
  CHECK_FALSE(contains(e1, e2));
  CHECK_THROWS_AS(intersect(e1, Subspace::zero(f, 3)), std::invalid_argument);
}

TEST_CASE("dimension formula on all pairs of subspaces of GF(2)^3") {
  const Field f = Field::make(2, 1, 1);
  const auto subs = all_subspaces(f, 3);
  CHECK(subs.size() == 16);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      const Subspace i = intersect(a, b), s = sum(a, b);
      CHECK(i.dim() + s.dim() == a.dim() + b.dim());
      CHECK(contains(a, i));
      CHECK(contains(b, i));
      CHECK(contains(s, a));
      CHECK(contains(s, b));
      CHECK(contains(a, b) == (intersect(a, b) == b));
    }
}

TEST_CASE("modular law on random triples in GF(2)^4") {
  const Field f = Field::make(2, 1, 1);
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int t = 0; t < 2000; ++t) {
    const Subspace a = random_subspace(f, 4, rng), b = random_subspace(f, 4, rng), c = random_subspace(f, 4, rng);
    if (!contains(c, a)) continue;
    ++tested;
    CHECK(sum(a, intersect(b, c)) == intersect(sum(a, b), c));
  }
  CHECK(tested > 50);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  for (const auto& [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const Field f = Field::make(p, 1, k);
    for (int n = 0; n <= 4; ++n) {
      if (f.size() > 3 && n > 3) continue;
      for (int d = 0; d <= n; ++d) {
        const auto subs = enumerate_subspaces(f, n, d);
        const std::set<Subspace> unique(subs.begin(), subs.end());
        CHECK(unique.size() == subs.size());
        CHECK(subs.size() == gaussian_binomial(n, d, f.size()));
        for (const auto& s : subs) CHECK(s.dim() == d);
      }
    }
  }
}

TEST_CASE("canonical form makes equality basis independent") {
  const Field f = Field::make(3, 1, 1);
  const Subspace a = Subspace::span(Mat::from_ints(f, {{1, 2, 0}, {0, 1, 1}}));
  const Subspace b = Subspace::span(Mat::from_ints(f, {{1, 0, 1}, {1, 2, 0}, {2, 1, 0}}));
  CHECK(a == b);
  CHECK(a.dim() == 2);
}

TEST_CASE("Frobenius on subspaces") {
  const Field f = Field::make(2, 1, 2);
  const Elem x = f.generator();
  Mat m(f, 1, 2);
  m(0, 0) = 1;
  m(0, 1) = x;
  const Subspace line = Subspace::span(m);
  Mat expected(f, 1, 2);
  expected(0, 0) = 1;
  expected(0, 1) = f.frobenius(x);
  CHECK(line.frobenius() == Subspace::span(expected));
  CHECK(line.frobenius().frobenius() == line);
  CHECK_FALSE(line.is_rational());
  CHECK(Subspace::coordinate(f, 2, 1).is_rational());
}

TEST_CASE("inverse, change of field and random helpers") {
  std::mt19937_64 rng(3);
  const Field f = Field::make(3, 1, 1), big = Field::make(3, 1, 3);
  for (int t = 0; t < 50; ++t) {
    const Mat g = random_rational_invertible(f, 4, rng);
    const auto inv = g.inverse();
    REQUIRE(inv);
    CHECK(g * *inv == Mat::identity(f, 4));
    const Mat lifted = change_field(g, big);
    CHECK(lifted.is_rational());
    CHECK(change_field(lifted, f) == g);
  }
  CHECK_FALSE(Mat::from_ints(f, {{1, 2}, {2, 1}}).inverse());
  const Field g4 = Field::make(2, 1, 2);
  Mat nonrational(g4, 1, 1);
  nonrational(0, 0) = g4.generator();
  CHECK_THROWS_AS(change_field(nonrational, Field::make(2, 1, 1)), std::invalid_argument);
}

TEST_CASE("matrix shape errors") {
  const Field f = Field::make(2, 1, 1);
  CHECK_THROWS_AS(Mat::identity(f, 2) * Mat::identity(f, 3), std::invalid_argument);
  CHECK_THROWS_AS(Mat::identity(f, 2) + Mat::identity(f, 3), std::invalid_argument);
}
