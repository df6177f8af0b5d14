#include <stdexcept>
#include <random>
#include <sstream>

#include "doctest.h"
#include "flagvar/io.hpp"
#include "flagvar/normal_forms.hpp"
#include "json.hpp"

using namespace flagvar;

TEST_CASE("scalars") {
  const Field f2 = Field::make(2, 1, 1), f4 = Field::make(2, 1, 2), f9 = Field::make(3, 2, 1);
  CHECK(format_scalar(f2, 1) == "1");
  CHECK(format_scalar(f4, f4.generator()) == "0,1");
  CHECK(parse_scalar(f4, "1,1") == f4.mul(f4.generator(), f4.generator()));
  CHECK(parse_scalar(f4, "1") == 1);
  for (Elem a = 0; a < f9.size(); ++a) CHECK(parse_scalar(f9, format_scalar(f9, a)) == a);
  CHECK_THROWS_AS(parse_scalar(f4, "1,1,1"), std::invalid_argument);
  // single integers are reduced mod p
  CHECK(parse_scalar(f2, "3") == 1);
  CHECK(parse_scalar(Field::make(3, 1, 1), "-1") == 2);
  CHECK_THROWS_AS(parse_scalar(f4, "2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(f2, "x"), std::invalid_argument);
}

TEST_CASE("fields, partitions, permutations, tableaux") {
  const Field f = parse_field("3,1,2");
  CHECK(f.p() == 3);
  CHECK(f.size() == 9);
  CHECK_THROWS_AS(parse_field("3,1"), std::invalid_argument);
  CHECK(parse_partition("2,2") == Partition({2, 2}));
  CHECK(format_partition(Partition({3, 1})) == "3,1");
  CHECK(parse_perm("2143") == Perm({2, 1, 4, 3}));
  CHECK(parse_perm("2,1,4,3") == Perm({2, 1, 4, 3}));
  CHECK(format_perm(Perm({3, 4, 1, 2})) == "3,4,1,2");
  CHECK_THROWS_AS(parse_perm("2103"), std::invalid_argument);
  const Tableau t({{1, 3}, {2, 4}});
  CHECK(format_tableau(t) == "1,3;2,4");
  CHECK(parse_tableau("1,3;2,4") == t);
  CHECK_THROWS_AS(parse_tableau("3,1;2,4"), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
  std::mt19937_64 rng(12);
  for (const auto& f : {Field::make(2, 1, 1), Field::make(3, 1, 2), Field::make(2, 2, 1)}) {
    Mat m(f, 3, 4);
    std::uniform_int_distribution<Elem> e(0, static_cast<Elem>(f.size() - 1));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = e(rng);
    std::istringstream in(format_matrix(m));
    CHECK(read_matrix(in) == m);
  }
  std::istringstream bad("2 2 2 1 1\n1 0\n");
  CHECK_THROWS_AS(read_matrix(bad), std::invalid_argument);
  std::istringstream short_row("2 2 2 1 1\n1 0\n1\n");
  CHECK_THROWS_AS(read_matrix(short_row), std::invalid_argument);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.mat"), std::invalid_argument);
}

TEST_CASE("matrix files in the test data") {
  const Mat m = read_matrix_file(FLAGVAR_TEST_DATA "/weyr22.mat");
  CHECK(m == weyr_matrix(Partition({2, 2}), Field::make(2, 1, 1)));
}

TEST_CASE("series round trip and files") {
  const Field f2 = Field::make(2, 1, 1);
  const auto s = read_series_file(FLAGVAR_TEST_DATA "/swap.series", f2);
  CHECK(s.d() == 2);
  CHECK(s.r() == 2);
  CHECK(s.coeff(0) == Mat::from_ints(f2, {{0, 1}, {1, 0}}));
  CHECK(s.coeff(1).is_zero());
  std::istringstream in(format_series(s));
  CHECK(read_series(in, f2) == s);
  std::istringstream ragged("1 0\n0 1\n\n1\n");
  CHECK_THROWS_AS(read_series(ragged, f2), std::invalid_argument);
  std::istringstream commented("# comment\n1 1\n0 1\n");
  CHECK(read_series(commented, f2).r() == 1);
}

TEST_CASE("flag JSON") {
  const Field f4 = Field::make(2, 1, 2);
  const auto j = nlohmann::json::parse(flag_to_json(Flag::standard(f4, 2)));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0] == nlohmann::json::parse(R"([["1","0"]])"));
  CHECK(j[1].size() == 2);
}
