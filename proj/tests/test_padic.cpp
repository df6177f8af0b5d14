#include <stdexcept>
#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "flagvar/normal_forms.hpp"
#include "flagvar/padic.hpp"

using namespace flagvar;

namespace {

TruncatedSeriesMat series(const Field& f, const std::vector<std::vector<std::vector<long long>>>& blocks) {
  std::vector<Mat> coeffs;
  for (const auto& b : blocks) coeffs.push_back(Mat::from_ints(f, b));
  return TruncatedSeriesMat(coeffs);
}

TruncatedSeriesMat random_series(const Field& f, int d, int r, std::mt19937_64& rng) {
  std::vector<Mat> coeffs;
  for (int i = 0; i < r; ++i) coeffs.push_back(random_rational(f, d, d, rng));
  return TruncatedSeriesMat(coeffs);
}

TruncatedSeriesMat random_unit(const Field& f, int d, int r, std::mt19937_64& rng) {
  std::vector<Mat> coeffs{random_rational_invertible(f, d, rng)};
  for (int i = 1; i < r; ++i) coeffs.push_back(random_rational(f, d, d, rng));
  return TruncatedSeriesMat(coeffs);
}

Partition rectangle(int d, int r) { return Partition(std::vector<int>(d, r)); }

}  // namespace

TEST_CASE("embedding examples") {
  const Field f = Field::make(3, 1, 1);
  const auto a = series(f, {{{2}}, {{1}}});
  CHECK(embed(a) == Mat::from_ints(f, {{2, 1}, {0, 2}}));
  const auto b = series(f, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(embed(b) == Mat::from_ints(f, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(embed(TruncatedSeriesMat::identity(f, 2, 3)) == Mat::identity(f, 6));
  // pi itself embeds as the nilpotent part of the rectangular Weyr form
  const auto pi = series(f, {{{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}});
  CHECK(embed(pi) + Mat::identity(f, 4) == weyr_matrix(rectangle(2, 2), f));
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(2);
  for (const auto& f : {Field::make(2, 1, 1), Field::make(3, 1, 1)})
    for (int d = 1; d <= 3; ++d)
      for (int r = 1; r <= 3; ++r)
        for (int t = 0; t < 10; ++t) {
          const auto a = random_series(f, d, r, rng), b = random_series(f, d, r, rng);
          CHECK(embed(a * b) == embed(a) * embed(b));
          CHECK(embed(a + b) == embed(a) + embed(b));
        }
}

TEST_CASE("truncated multiplication drops high powers") {
  const Field f = Field::make(2, 1, 1);
  const auto pi = series(f, {{{0}}, {{1}}});
  const auto sq = pi * pi;
  CHECK(sq == series(f, {{{0}}, {{0}}}));
}

TEST_CASE("centralizer property") {
  std::mt19937_64 rng(4);
  for (const auto& f : {Field::make(2, 1, 1), Field::make(3, 1, 1)})
    for (int d = 1; d <= 3; ++d)
      for (int r = 1; r <= 3; ++r)
        for (int t = 0; t < 5; ++t) CHECK(centralizer_check(rectangle(d, r), random_series(f, d, r, rng)));
  const Field f2 = Field::make(2, 1, 1);
  CHECK_THROWS_AS(centralizer_check(Partition({2, 1}), TruncatedSeriesMat::identity(f2, 1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(centralizer_check(rectangle(2, 2), TruncatedSeriesMat::identity(f2, 2, 3)), std::invalid_argument);
}

TEST_CASE("units and inverses") {
  std::mt19937_64 rng(8);
  const Field f = Field::make(3, 1, 1);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_unit(f, 2, 3, rng);
    REQUIRE(g.is_unit());
    const auto inv = g.inverse();
    REQUIRE(inv);
    CHECK(g * *inv == TruncatedSeriesMat::identity(f, 2, 3));
    CHECK(*inv * g == TruncatedSeriesMat::identity(f, 2, 3));
  }
  const auto pi = series(f, {{{0}}, {{1}}});
  CHECK_FALSE(pi.is_unit());
  CHECK_FALSE(pi.inverse());
}

TEST_CASE("multiplicative order") {
  const Field f2 = Field::make(2, 1, 1);
  const auto swap = series(f2, {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}});
  CHECK(multiplicative_order(swap) == 2);
  CHECK(multiplicative_order(TruncatedSeriesMat::identity(f2, 2, 2)) == 1);
  // 1 + pi has order p when r <= p
  CHECK(multiplicative_order(series(f2, {{{1}}, {{1}}})) == 2);
  const Field f3 = Field::make(3, 1, 1);
  CHECK(multiplicative_order(TruncatedSeriesMat::scalar(f3, 2, 2, 2)) == 2);
  CHECK_THROWS_AS(multiplicative_order(swap, 1), BudgetExceeded);
  const auto pi = series(f2, {{{0}}, {{1}}});
  CHECK_THROWS_AS(multiplicative_order(pi), std::invalid_argument);
}

TEST_CASE("action on flags") {
  const Field f2 = Field::make(2, 1, 1), f4 = Field::make(2, 1, 2);
  const Mat u = weyr_matrix(rectangle(2, 2), f2);
  const Perm w({2, 1, 4, 3});
  const auto pts = points(VarietySpec::intersection(u, w), 2);
  REQUIRE(pts.size() == 4);
  const std::set<Flag> set(pts.begin(), pts.end());
  for (const auto& fl : pts) CHECK(act_on_flag(TruncatedSeriesMat::identity(f2, 2, 2), fl) == fl);

  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_unit(f2, 2, 2, rng);
    for (const auto& fl : pts) CHECK(set.count(act_on_flag(g, fl)) == 1);
  }
  const auto pi = series(f2, {{{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}});
  CHECK_THROWS_AS(act_on_flag(pi, pts.front()), std::invalid_argument);
  std::vector<Mat> c{Mat::identity(f4, 2), Mat(f4, 2, 2)};
  c[0](0, 1) = f4.generator();
  CHECK_THROWS_AS(act_on_flag(TruncatedSeriesMat(c), pts.front()), std::invalid_argument);

  // scalars act trivially
  const Field f3 = Field::make(3, 1, 1);
  const auto pts3 = points(VarietySpec::intersection(weyr_matrix(rectangle(2, 2), f3), w), 2);
  for (const auto& fl : pts3) CHECK(act_on_flag(TruncatedSeriesMat::scalar(f3, 2, 2, 2), fl) == fl);
}

TEST_CASE("Lefschetz counts") {
  const Field f2 = Field::make(2, 1, 1);
  const Perm w({2, 1, 4, 3});
  const Mat u = weyr_matrix(rectangle(2, 2), f2);
  for (int k = 1; k <= 3; ++k) {
    const auto direct = count_points(VarietySpec::intersection(u, w), k);
    CHECK(lefschetz_count(rectangle(2, 2), w, TruncatedSeriesMat::identity(f2, 2, 2), k) == direct);
  }
  const Field f3 = Field::make(3, 1, 1);
  const Mat u3 = weyr_matrix(rectangle(2, 2), f3);
  CHECK(lefschetz_count(rectangle(2, 2), w, TruncatedSeriesMat::scalar(f3, 2, 2, 2), 1) ==
        count_points(VarietySpec::intersection(u3, w), 1));
  // the twisted count runs over GF(81); the full-flag estimate is far above the
  // default budget even though stability pruning keeps the walk small
  EnumerationOptions wide;
  wide.budget = std::numeric_limits<std::uint64_t>::max();
  CHECK(lefschetz_count(rectangle(2, 2), w, TruncatedSeriesMat::scalar(f3, 2, 2, 2), 2, wide) ==
        count_points(VarietySpec::intersection(u3, w), 2));
  CHECK_THROWS_AS(lefschetz_count(rectangle(2, 2), w, TruncatedSeriesMat::scalar(f3, 2, 2, 2), 2), BudgetExceeded);

  const auto swap = series(f2, {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}});
  CHECK(lefschetz_count(rectangle(2, 2), w, swap, 1) == 4);

  // conjugating the twist by a rational unit leaves the count unchanged
  std::mt19937_64 rng(10);
  for (int t = 0; t < 3; ++t) {
    const auto h = random_unit(f2, 2, 2, rng);
    CHECK(lefschetz_count(rectangle(2, 2), w, h * swap * *h.inverse(), 1) == 4);
  }
  CHECK_THROWS_AS(lefschetz_count(Partition({2, 1}), Perm({2, 1, 3}), swap, 1), std::invalid_argument);
}
