#include <stdexcept>
#include <set>

#include "doctest.h"
#include "flagvar/gf.hpp"

using namespace flagvar;

namespace {

// Naive polynomial arithmetic over GF(p), coefficients constant term first.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(a);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if (b.back() * x % p == 1) return x;
    return 1;
  }();
  while (a.size() >= b.size()) {
    const int shift = static_cast<int>(a.size() - b.size());
    const int factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

// Monic polynomials of degree d, ordered with c_0 as the most significant digit.
std::vector<Poly> monic(int p, int d) {
  std::vector<Poly> out;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    Poly g(d + 1, 0);
    g[d] = 1;
    int rem = code;
    for (int i = d - 1; i >= 0; --i) {
      g[i] = rem % p;
      rem /= p;
    }
    out.push_back(g);
  }
  return out;
}

bool irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e)
    for (const auto& g : monic(p, e))
      if (poly_mod(f, g, p).empty()) return false;
  return true;
}

Poly smallest_irreducible(int p, int d) {
  for (const auto& f : monic(p, d))
    if (irreducible(f, p)) return f;
  return {};
}

struct Case {
  int p, m, k;
};

const Case kSmallFields[] = {{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {2, 3, 2},
                             {3, 1, 1}, {3, 1, 2}, {3, 2, 1}, {3, 1, 3}, {3, 1, 4}, {3, 2, 2}, {5, 1, 2},
                             {7, 1, 2}, {2, 1, 6}, {2, 3, 1}};

}  // namespace

TEST_CASE("canonical moduli") {
  CHECK(Field::make(2, 1, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::make(2, 1, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::make(3, 1, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::make(2, 1, 3).modulus() == std::vector<int>{1, 0, 1, 1});
  for (const auto& c : kSmallFields) {
    const Field f = Field::make(c.p, c.m, c.k);
    CAPTURE(c.p);
    CAPTURE(f.degree());
    CHECK(f.modulus() == smallest_irreducible(c.p, f.degree()));
  }
}

TEST_CASE("modulus depends only on p and the total degree") {
  CHECK(Field::make(2, 2, 1).modulus() == Field::make(2, 1, 2).modulus());
  CHECK(Field::make(2, 2, 1).q() == 4);
  CHECK(Field::make(2, 1, 2).q() == 2);
}

TEST_CASE("GF(4) arithmetic") {
  const Field f = Field::make(2, 1, 2);
  const Elem x = f.generator();
  const Elem x1 = f.from_coeffs(std::vector<int>{1, 1});
  CHECK(f.mul(x, x) == x1);
  CHECK(f.frobenius(x) == x1);
  CHECK(f.mul(f.inv(x), x) == 1);
  CHECK(f.frobenius(0) == 0);
  CHECK(f.frobenius(1) == 1);
  CHECK(f.in_base_field(0));
  CHECK(f.in_base_field(1));
  CHECK_FALSE(f.in_base_field(x));
  for (Elem a = 0; a < f.size(); ++a) CHECK(f.add(a, 0) == a);
}

TEST_CASE("GF(9) has three base elements") {
  const Field f = Field::make(3, 1, 2);
  int fixed = 0;
  for (Elem a = 0; a < f.size(); ++a) fixed += f.in_base_field(a);
  CHECK(fixed == 3);
  CHECK(f.base_elements().size() == 3);
}

TEST_CASE("field axioms, cyclic group and Frobenius, exhaustive on small fields") {
  for (const auto& c : kSmallFields) {
    const Field f = Field::make(c.p, c.m, c.k);
    if (f.size() > 81) continue;
    CAPTURE(f.size());
    CAPTURE(c.m);
    const auto n = static_cast<Elem>(f.size());
    for (Elem a = 0; a < n; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, a) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, f.size() - 1) == 1);
      }
      CHECK(f.frobenius(a, f.k()) == a);
      for (Elem b = 0; b < n; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        if (b) CHECK(f.mul(f.div(a, b), b) == a);
      }
    }
    // cyclic multiplicative group
    const Elem g = f.primitive_element();
    std::set<Elem> powers;
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
      powers.insert(x);
      x = f.mul(x, g);
    }
    CHECK(powers.size() == f.size() - 1);
    // fixed field of a -> a^q has q elements
    std::uint64_t fixed = 0;
    for (Elem a = 0; a < n; ++a) {
      CHECK(f.frobenius(a) == f.pow(a, f.q()));
      fixed += f.in_base_field(a);
    }
    CHECK(fixed == f.q());
  }
}

TEST_CASE("associativity and distributivity on GF(8) and GF(9)") {
  for (const auto& [p, d] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const Field f = Field::make(p, 1, d);
    const auto n = static_cast<Elem>(f.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
  }
}

TEST_CASE("coefficient round trip") {
  const Field f = Field::make(3, 1, 3);
  for (Elem a = 0; a < f.size(); ++a) CHECK(f.from_coeffs(f.coeffs(a)) == a);
  CHECK(f.from_int(-1) == 2);
  CHECK(f.from_int(7) == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Field::make(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 1, 21), std::invalid_argument);
  CHECK_NOTHROW(Field::make(2, 1, 21, std::uint64_t{1} << 21));
  const Field f = Field::make(2, 1, 2);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  const Scalar a(f, 2), b(Field::make(3, 1, 1), 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(Scalar(f, 0).inv(), std::domain_error);
}

TEST_CASE("Scalar wrapper") {
  const Field f = Field::make(2, 1, 2);
  const Scalar x(f, f.generator());
  CHECK((x * x) == x + Scalar(f, 1));
  CHECK(x.frobenius() == x * x);
  CHECK(x.inv() * x == Scalar(f, 1));
  CHECK(x.pow(3) == Scalar(f, 1));
  CHECK_FALSE(x.in_base_field());
  CHECK(x.coeffs() == std::vector<int>{0, 1});
}

TEST_CASE("base field embedding is a homomorphism on GF(q)") {
  const Field small = Field::make(2, 2, 1), big = Field::make(2, 2, 3);
  const auto emb = base_field_embedding(small, big);
  for (Elem a = 0; a < small.size(); ++a) {
    REQUIRE(emb[a] != kNotRational);
    CHECK(big.in_base_field(emb[a]));
    for (Elem b = 0; b < small.size(); ++b) {
      CHECK(emb[small.add(a, b)] == big.add(emb[a], emb[b]));
      CHECK(emb[small.mul(a, b)] == big.mul(emb[a], emb[b]));
    }
  }
  const Field g4 = Field::make(2, 1, 2), g8 = Field::make(2, 1, 3);
  const auto e = base_field_embedding(g4, g8);
  CHECK(e[0] == 0);
  CHECK(e[1] == 1);
  CHECK(e[2] == kNotRational);
  CHECK(e[3] == kNotRational);
}

TEST_CASE("prime test") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
