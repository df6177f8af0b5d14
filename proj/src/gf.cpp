#include "flagvar/gf.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace flagvar {

namespace detail {

struct FieldTables {
  int p = 0, m = 0, k = 0, degree = 0;
  std::uint64_t size = 0, q = 0;
  std::vector<int> modulus;
  std::vector<Elem> exp;            // 2*(size-1) entries
  std::vector<std::uint32_t> log;   // log[0] unused
  std::vector<std::int32_t> zech;   // log(1 + g^t), -1 when 1 + g^t = 0
  std::vector<Elem> neg;
  std::vector<Elem> frob;
  std::vector<Elem> base;
  Elem primitive = 1;
};

}  // namespace detail

namespace {

using Poly = std::vector<int>;  // constant term first

bool checked_pow(std::uint64_t base, int e, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > cap / base) return false;
    out *= base;
  }
  return out <= cap;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  const int df = static_cast<int>(f.size()) - 1;
  // f is monic
  for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p) % p;
    }
  }
  a.resize(df);
  return a;
}

bool divides_poly(const Poly& g, const Poly& f, int p) {
  Poly r = poly_mod(f, g, p);
  for (int c : r)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (divides_poly(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographic order on (c_0, c_1, ..., c_{deg-1}) with c_0 most significant.
Poly smallest_irreducible(int p, int deg) {
  std::uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    std::uint64_t t = idx;
    for (int i = deg - 1; i >= 0; --i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly decode(std::uint64_t code, int p, int deg) {
  Poly c(deg, 0);
  for (int i = 0; i < deg; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  return c;
}

std::uint64_t encode(const Poly& c, int p) {
  std::uint64_t code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& f, int p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const detail::FieldTables> build_tables(int p, int m, int k, std::uint64_t size) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  t->k = k;
  t->degree = m * k;
  t->size = size;
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) q *= static_cast<std::uint64_t>(p);
  t->q = q;
  t->modulus = smallest_irreducible(p, t->degree);
  const int deg = t->degree;
  const Poly& f = t->modulus;
  const std::uint64_t order = size - 1;

  const auto factors = prime_factors(order);
  Poly one(deg, 0);
  one[0] = 1;
  std::uint64_t prim = 1;
  for (std::uint64_t c = 1; c < size; ++c) {
    const Poly a = decode(c, p, deg);
    bool ok = true;
    for (auto l : factors) {
      if (poly_powmod(a, order / l, f, p) == one) {
        ok = false;
        break;
      }
    }
    if (ok) {
      prim = c;
      break;
    }
  }
  t->primitive = static_cast<Elem>(prim);

  t->exp.assign(2 * order, 0);
  t->log.assign(size, 0);
  const Poly g = decode(prim, p, deg);
  Poly cur = one;
  for (std::uint64_t i = 0; i < order; ++i) {
    const auto code = static_cast<Elem>(encode(cur, p));
    t->exp[i] = code;
    t->exp[i + order] = code;
    t->log[code] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, f, p);
  }

  t->neg.assign(size, 0);
  for (std::uint64_t c = 0; c < size; ++c) {
    Poly d = decode(c, p, deg);
    for (int& x : d) x = (p - x) % p;
    t->neg[c] = static_cast<Elem>(encode(d, p));
  }

  t->zech.assign(order, -1);
  for (std::uint64_t i = 0; i < order; ++i) {
    Poly d = decode(t->exp[i], p, deg);
    d[0] = (d[0] + 1) % p;
    const auto s = encode(d, p);
    t->zech[i] = s == 0 ? -1 : static_cast<std::int32_t>(t->log[s]);
  }

  t->frob.assign(size, 0);
  for (std::uint64_t c = 1; c < size; ++c) {
    const std::uint64_t l = t->log[c];
    t->frob[c] = t->exp[(l * (q % order)) % order];
  }
  for (std::uint64_t c = 0; c < size; ++c) {
    if (t->frob[c] == c) t->base.push_back(static_cast<Elem>(c));
  }
  return t;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(int p, int m, int k, std::uint64_t size_cap) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1 || k < 1) throw std::invalid_argument("extension degrees must be >= 1");
  std::uint64_t size = 0;
  if (!checked_pow(static_cast<std::uint64_t>(p), m * k, size_cap, size)) {
    throw std::invalid_argument("field GF(" + std::to_string(p) + "^" + std::to_string(m * k) +
                                ") exceeds the size cap of " + std::to_string(size_cap));
  }
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m, k}];
  if (!slot) slot = build_tables(p, m, k, size);
  return Field(slot);
}

int Field::p() const { return t_->p; }
int Field::m() const { return t_->m; }
int Field::k() const { return t_->k; }
int Field::degree() const { return t_->degree; }
std::uint64_t Field::size() const { return t_->size; }
std::uint64_t Field::q() const { return t_->q; }
const std::vector<int>& Field::modulus() const { return t_->modulus; }

Elem Field::add(Elem a, Elem b) const {
  if (t_->p == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t order = t_->size - 1;
  const std::uint32_t la = t_->log[a];
  const std::uint32_t lb = t_->log[b];
  const std::uint64_t diff = lb >= la ? lb - la : lb + order - la;
  const std::int32_t z = t_->zech[diff];
  if (z < 0) return 0;
  return t_->exp[la + static_cast<std::uint32_t>(z)];
}

Elem Field::neg(Elem a) const { return t_->neg[a]; }

Elem Field::sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint64_t order = t_->size - 1;
  const std::uint32_t l = t_->log[a];
  return t_->exp[l == 0 ? 0 : order - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = t_->size - 1;
  return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * (e % order)) % order];
}

Elem Field::frobenius(Elem a) const { return t_->frob[a]; }

Elem Field::frobenius(Elem a, int times) const {
  times %= t_->k;
  if (times < 0) times += t_->k;
  for (int i = 0; i < times; ++i) a = t_->frob[a];
  return a;
}

bool Field::in_base_field(Elem a) const { return t_->frob[a] == a; }

Elem Field::from_int(long long v) const {
  const long long p = t_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::generator() const {
  if (t_->degree == 1) return static_cast<Elem>((t_->p - t_->modulus[0]) % t_->p);
  return static_cast<Elem>(t_->p);
}

Elem Field::primitive_element() const { return t_->primitive; }

std::vector<int> Field::coeffs(Elem a) const { return decode(a, t_->p, t_->degree); }

Elem Field::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > t_->degree)
    throw std::invalid_argument("too many coefficients for GF(" + std::to_string(t_->p) + "^" +
                                std::to_string(t_->degree) + ")");
  Poly padded(t_->degree, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= t_->p)
      throw std::invalid_argument("coefficient " + std::to_string(c[i]) + " outside [0, p)");
    padded[i] = c[i];
  }
  return static_cast<Elem>(encode(padded, t_->p));
}

const std::vector<Elem>& Field::base_elements() const { return t_->base; }

bool Field::operator==(const Field& o) const {
  return t_ == o.t_ || (t_->p == o.t_->p && t_->m == o.t_->m && t_->k == o.t_->k);
}

namespace {

// Image of GF(q) = make(p, m, 1) inside `f`, sending x to the smallest root of
// the degree-m modulus.
std::vector<Elem> base_into(const Field& f) {
  const Field base = Field::make(f.p(), f.m(), 1);
  const auto& mod = base.modulus();
  Elem root = kNotRational;
  for (Elem c : f.base_elements()) {
    Elem acc = 0;
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) acc = f.add(f.mul(acc, c), f.from_int(mod[i]));
    if (acc == 0) {
      root = c;
      break;
    }
  }
  if (root == kNotRational) throw std::logic_error("base modulus has no root in the fixed subfield");
  std::vector<Elem> out(base.size());
  for (Elem b = 0; b < base.size(); ++b) {
    const auto cs = base.coeffs(b);
    Elem acc = 0;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) acc = f.add(f.mul(acc, root), f.from_int(cs[i]));
    out[b] = acc;
  }
  return out;
}

}  // namespace

std::vector<Elem> base_field_embedding(const Field& from, const Field& to) {
  if (from.p() != to.p() || from.m() != to.m())
    throw std::invalid_argument("base field embedding needs matching p and m");
  std::vector<Elem> out(from.size(), kNotRational);
  if (from == to) {
    for (Elem c : from.base_elements()) out[c] = c;
    return out;
  }
  const auto src = base_into(from);
  const auto dst = base_into(to);
  for (std::size_t b = 0; b < src.size(); ++b) out[src[b]] = dst[b];
  return out;
}

Scalar::Scalar(Field f, Elem v) : field_(std::move(f)), v_(v) {
  if (v_ >= field_.size()) throw std::invalid_argument("element code out of range");
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("scalars belong to different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return {field_, field_.add(v_, o.v_)};
}
Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return {field_, field_.sub(v_, o.v_)};
}
Scalar Scalar::operator-() const { return {field_, field_.neg(v_)}; }
Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return {field_, field_.mul(v_, o.v_)};
}
Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return {field_, field_.div(v_, o.v_)};
}
Scalar Scalar::inv() const { return {field_, field_.inv(v_)}; }
Scalar Scalar::pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }
Scalar Scalar::frobenius() const { return {field_, field_.frobenius(v_)}; }

}  // namespace flagvar
