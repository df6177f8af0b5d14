#include "flagvar/flag_geometry.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "flagvar/normal_forms.hpp"

namespace flagvar {

class FlagBuilder {
 public:
  static Flag make(std::vector<Subspace> chain, Mat adapted) { return Flag(std::move(chain), std::move(adapted)); }
};

Flag Flag::from_basis(const Mat& basis) {
  if (basis.rows() != basis.cols()) throw std::invalid_argument("flag basis must be square");
  const int n = basis.rows();
  EchelonBasis ech(basis.field(), n);
  std::vector<Subspace> chain{Subspace::zero(basis.field(), n)};
  for (int i = 0; i < n; ++i) {
    if (!ech.insert(basis.row(i))) throw std::invalid_argument("flag basis rows are linearly dependent");
    chain.push_back(Subspace::span(ech.to_rref()));
  }
  return Flag(std::move(chain), basis);
}

Flag Flag::standard(const Field& f, int n) { return from_basis(Mat::identity(f, n)); }

Flag Flag::frobenius(int times) const {
  std::vector<Subspace> chain;
  chain.reserve(chain_.size());
  Mat adapted = adapted_;
  for (int t = 0; t < times; ++t) adapted = adapted.frobenius();
  for (const auto& s : chain_) {
    Subspace cur = s;
    for (int t = 0; t < times; ++t) cur = cur.frobenius();
    chain.push_back(std::move(cur));
  }
  return Flag(std::move(chain), std::move(adapted));
}

Flag Flag::translate(const Mat& g) const {
  if (g.rows() != n() || g.cols() != n()) throw std::invalid_argument("translating matrix has the wrong size");
  if (!(g.field() == field())) throw std::invalid_argument("translating matrix lives over a different field");
  // Rows of the adapted basis are vectors; g acts on columns.
  Mat moved = (g * adapted_.transpose()).transpose();
  return from_basis(moved);
}

bool Flag::is_rational() const {
  return std::all_of(chain_.begin(), chain_.end(), [](const Subspace& s) { return s.is_rational(); });
}

std::strong_ordering Flag::operator<=>(const Flag& o) const {
  return std::lexicographical_compare_three_way(chain_.begin(), chain_.end(), o.chain_.begin(), o.chain_.end());
}

Flag frobenius_flag(const Flag& f) { return f.frobenius(1); }

namespace {

void require_compatible(const Flag& a, const Flag& b) {
  if (a.n() != b.n()) throw std::invalid_argument("flags have different dimensions");
  if (!(a.field() == b.field())) throw std::invalid_argument("flags live over different fields");
}

}  // namespace

std::vector<std::vector<int>> intersection_dims(const Flag& a, const Flag& b) {
  require_compatible(a, b);
  const int n = a.n();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    EchelonBasis ech(a.field(), n);
    for (int r = 0; r < i; ++r) ech.insert(a.adapted_basis().row(r));
    d[i][0] = 0;
    for (int j = 1; j <= n; ++j) {
      ech.insert(b.adapted_basis().row(j - 1));
      d[i][j] = i + j - ech.rank();
    }
  }
  return d;
}

Perm relative_position(const Flag& a, const Flag& b) {
  const auto d = intersection_dims(a, b);
  const int n = a.n();
  std::vector<int> w(n, 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) {
        w[j - 1] = i;
        break;
      }
    }
  }
  return Perm(std::move(w));
}

bool in_relative_position(const std::vector<std::vector<int>>& dims, const Perm& w) {
  const int n = w.size();
  if (static_cast<int>(dims.size()) != n + 1) throw std::invalid_argument("dimension table does not match permutation");
  for (int j = 0; j <= n; ++j) {
    std::vector<bool> hit(n + 1, false);
    for (int t = 1; t <= j; ++t) hit[w(t)] = true;
    int count = 0;
    for (int i = 0; i <= n; ++i) {
      if (i > 0 && hit[i]) ++count;
      if (dims[i][j] != count) return false;
    }
  }
  return true;
}

UnipotentAction::UnipotentAction(const Mat& u) : u_(u), nil_(u - Mat::identity(u.field(), u.rows())) {
  require_rational_unipotent(u);
  const int n = u.rows();
  kernels_.push_back(Subspace::zero(u.field(), n));
  Mat power = Mat::identity(u.field(), n);
  while (kernels_.back().dim() < n) {
    power = power * nil_;
    kernels_.push_back(kernel(power));
  }
}

const Subspace& UnipotentAction::kernel_power(int t) const {
  if (t < 0) throw std::invalid_argument("negative kernel power");
  return kernels_[std::min<std::size_t>(static_cast<std::size_t>(t), kernels_.size() - 1)];
}

bool UnipotentAction::stabilises(const Subspace& s) const {
  if (s.ambient_dim() != n()) throw std::invalid_argument("subspace and matrix dimensions differ");
  if (!(s.field() == u_.field())) throw std::invalid_argument("subspace and matrix live over different fields");
  // u invertible: u s <= s already forces u s = s.
  for (int r = 0; r < s.dim(); ++r)
    if (!s.contains(u_.apply(s.basis().row(r)))) return false;
  return true;
}

bool UnipotentAction::stabilises(const Flag& f) const {
  if (f.n() != n()) throw std::invalid_argument("matrix and flag dimensions differ");
  for (int i = 1; i < f.n(); ++i)
    if (!stabilises(f[i])) return false;
  return true;
}

bool UnipotentAction::in_steinberg_cell(const Tableau& P, const Flag& f) const {
  for (int m = f.n(); m >= 1; --m) {
    const int j = P.position(m).second;
    const Subspace& vm = f[m];
    const Subspace& below = f[m - 1];
    const Subspace nv = image(nil_, vm);
    if (!below.contains(sum(nv, intersect(vm, kernel_power(j - 1))))) return false;
    if (below.contains(sum(nv, intersect(vm, kernel_power(j))))) return false;
  }
  return true;
}

Tableau UnipotentAction::spaltenstein_tableau(const Flag& f) const {
  const int n = f.n();
  std::vector<std::vector<int>> rows;
  std::vector<int> prev_shape;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> columns;
    int last = 0;
    for (int t = 1; last < m; ++t) {
      const int d = intersect(f[m], kernel_power(t)).dim();
      columns.push_back(d - last);
      last = d;
    }
    const auto shape = partition_from_columns(columns).parts();
    std::size_t grown = 0;
    while (grown < prev_shape.size() && prev_shape[grown] == shape[grown]) ++grown;
    if (grown == rows.size()) rows.emplace_back();
    rows[grown].push_back(m);
    prev_shape = shape;
  }
  return Tableau(std::move(rows));
}

namespace {

void require_same_space(const Mat& u, const Flag& f) {
  if (u.rows() != f.n()) throw std::invalid_argument("matrix and flag dimensions differ");
  if (!(u.field() == f.field())) throw std::invalid_argument("matrix and flag live over different fields");
}

}  // namespace

bool springer_membership(const Mat& u, const Flag& f) {
  require_same_space(u, f);
  return UnipotentAction(u).stabilises(f);
}

bool dl_membership(const Perm& w, const Flag& f) {
  if (w.size() != f.n()) throw std::invalid_argument("permutation and flag dimensions differ");
  return relative_position(f, f.frobenius()) == w;
}

bool steinberg_membership(const Mat& u, const Tableau& P, const Flag& f) {
  require_same_space(u, f);
  UnipotentAction action(u);
  if (P.shape() != jordan_type(u)) throw std::invalid_argument("tableau shape differs from the Jordan type of u");
  if (!action.stabilises(f)) throw std::invalid_argument("flag is not in the Springer fibre of u");
  return action.in_steinberg_cell(P, f);
}

Tableau spaltenstein_tableau(const Mat& u, const Flag& f) {
  require_same_space(u, f);
  UnipotentAction action(u);
  if (!action.stabilises(f)) throw std::invalid_argument("flag is not in the Springer fibre of u");
  return action.spaltenstein_tableau(f);
}

std::vector<Subspace> component_index(const Flag& f, const Partition& lambda) {
  if (lambda.size() != f.n()) throw std::invalid_argument("partition size differs from flag dimension");
  std::vector<Subspace> out;
  const auto c = lambda.conjugate();
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    const Subspace& s = f[acc];
    if (!(s.frobenius() == s))
      throw std::domain_error("V_" + std::to_string(acc) + " is not Frobenius-stable; flag is outside X_beta");
    out.push_back(s);
  }
  return out;
}

std::vector<Subspace> standard_component_index(const Field& f, const Partition& lambda) {
  std::vector<Subspace> out;
  const auto c = lambda.conjugate();
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    out.push_back(Subspace::coordinate(f, lambda.size(), acc));
  }
  return out;
}

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget)
    : std::runtime_error(what + ": estimated " + std::to_string(estimate) + " flags exceeds budget " +
                         std::to_string(budget)),
      estimate_(estimate),
      budget_(budget) {}

std::uint64_t flag_count(int n, std::uint64_t Q) {
  unsigned __int128 total = 1;
  const unsigned __int128 cap = UINT64_MAX;
  for (int i = 1; i <= n; ++i) {
    // (Q^i - 1) / (Q - 1) = 1 + Q + ... + Q^{i-1}
    unsigned __int128 term = 0, power = 1;
    for (int t = 0; t < i; ++t) {
      term += power;
      power *= Q;
      if (term > cap || power > cap * Q) return UINT64_MAX;
    }
    total *= term;
    if (total > cap) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_partial_flags(const Field& f, int n, const std::vector<int>& dims) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0 || dims[i] > n || (i > 0 && dims[i] <= dims[i - 1]))
      throw std::invalid_argument("partial flag dimensions must increase strictly within [0, n]");
  }
  if (dims.empty()) return 1;
  auto prev = enumerate_subspaces(f, n, dims[0]);
  std::vector<std::uint64_t> ways(prev.size(), 1);
  for (std::size_t i = 1; i < dims.size(); ++i) {
    auto cur = enumerate_subspaces(f, n, dims[i]);
    std::vector<std::uint64_t> cur_ways(cur.size(), 0);
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = 0; b < prev.size(); ++b)
        if (cur[a].contains(prev[b])) cur_ways[a] += ways[b];
    prev = std::move(cur);
    ways = std::move(cur_ways);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

namespace {

// Normalised vectors supported on the non-pivot columns of s, lexicographic.
std::vector<std::vector<Elem>> quotient_lines(const Subspace& s) {
  const int n = s.ambient_dim();
  const Elem size = static_cast<Elem>(s.field().size());
  std::vector<bool> is_pivot(n, false);
  for (int c : s.pivots()) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::vector<std::vector<Elem>> out;
  const int nf = static_cast<int>(free_cols.size());
  for (int lead = nf - 1; lead >= 0; --lead) {
    std::vector<Elem> tail(nf - 1 - lead, 0);
    while (true) {
      std::vector<Elem> v(n, 0);
      v[free_cols[lead]] = 1;
      for (std::size_t t = 0; t < tail.size(); ++t) v[free_cols[lead + 1 + t]] = tail[t];
      out.push_back(std::move(v));
      std::size_t t = tail.size();
      bool carried_out = true;
      while (t-- > 0) {
        if (++tail[t] < size) {
          carried_out = false;
          break;
        }
        tail[t] = 0;
      }
      if (carried_out) break;
    }
  }
  return out;
}

Subspace extend(const Subspace& s, const std::vector<Elem>& v) {
  std::vector<Elem> entries(s.basis().entries());
  entries.insert(entries.end(), v.begin(), v.end());
  return Subspace::span(Mat(s.field(), s.dim() + 1, s.ambient_dim(), std::move(entries)));
}

class Walker {
 public:
  Walker(int n, const Field& f, const PrefixFilter& keep) : n_(n), field_(f), keep_(keep) {}

  template <class Visit>
  void walk(std::vector<Subspace>& chain, std::vector<Elem>& adapted, const Visit& visit) const {
    const int depth = static_cast<int>(chain.size()) - 1;
    if (depth == n_) {
      visit(FlagBuilder::make(chain, Mat(field_, n_, n_, adapted)));
      return;
    }
    for (auto& v : quotient_lines(chain.back())) {
      Subspace next = extend(chain.back(), v);
      if (depth + 1 < n_ && keep_ && !keep_(next)) continue;
      chain.push_back(std::move(next));
      adapted.insert(adapted.end(), v.begin(), v.end());
      walk(chain, adapted, visit);
      adapted.resize(adapted.size() - n_);
      chain.pop_back();
    }
  }

 private:
  int n_;
  Field field_;
  const PrefixFilter& keep_;
};

void check_budget(int n, const Field& f, std::uint64_t budget) {
  const auto estimate = flag_count(n, f.size());
  if (estimate > budget)
    throw BudgetExceeded("flag enumeration n=" + std::to_string(n) + " over GF(" + std::to_string(f.size()) + ")",
                         estimate, budget);
}

}  // namespace

void for_each_flag(int n, const Field& f, const FlagVisitor& visit, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative flag dimension");
  check_budget(n, f, opts.budget);
  Walker walker(n, f, opts.keep_prefix);
  std::vector<Subspace> chain{Subspace::zero(f, n)};
  std::vector<Elem> adapted;
  walker.walk(chain, adapted, visit);
}

std::vector<Flag> enumerate_flags(int n, const Field& f, const EnumerationOptions& opts) {
  std::vector<Flag> out;
  for_each_flag(n, f, [&](const Flag& fl) { out.push_back(fl); }, opts);
  return out;
}

std::uint64_t count_flags_if(int n, const Field& f, const FlagPredicate& pred, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative flag dimension");
  check_budget(n, f, opts.budget);
  if (n <= 1) {
    std::uint64_t count = 0;
    for_each_flag(n, f, [&](const Flag& fl) { count += pred(fl) ? 1 : 0; }, opts);
    return count;
  }
  const Subspace zero = Subspace::zero(f, n);
  const auto firsts = quotient_lines(zero);
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(firsts.size()));

  Walker walker(n, f, opts.keep_prefix);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    try {
      std::uint64_t local = 0;
      for (std::size_t i = next++; i < firsts.size(); i = next++) {
        Subspace line = extend(zero, firsts[i]);
        if (opts.keep_prefix && !opts.keep_prefix(line)) continue;
        std::vector<Subspace> chain{zero, std::move(line)};
        std::vector<Elem> adapted(firsts[i]);
        walker.walk(chain, adapted, [&](const Flag& fl) { local += pred(fl) ? 1 : 0; });
      }
      total += local;
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return total.load();
}

VarietySpec VarietySpec::full(int n, int p, int m) {
  VarietySpec s;
  s.kind = VarietyKind::full;
  s.n = n;
  s.p = p;
  s.m = m;
  return s;
}

VarietySpec VarietySpec::springer(const Mat& u) {
  require_rational_unipotent(u);
  VarietySpec s = full(u.rows(), u.field().p(), u.field().m());
  s.kind = VarietyKind::springer;
  s.u = u;
  return s;
}

VarietySpec VarietySpec::dl(const Perm& w, int p, int m) {
  VarietySpec s = full(w.size(), p, m);
  s.kind = VarietyKind::dl;
  s.w = w;
  return s;
}

VarietySpec VarietySpec::intersection(const Mat& u, const Perm& w) {
  VarietySpec s = springer(u);
  if (w.size() != s.n) throw std::invalid_argument("permutation degree differs from matrix size");
  s.kind = VarietyKind::intersection;
  s.w = w;
  return s;
}

VarietySpec VarietySpec::steinberg(const Mat& u, const Tableau& P) {
  VarietySpec s = springer(u);
  if (P.shape() != jordan_type(u)) throw std::invalid_argument("tableau shape differs from the Jordan type of u");
  s.kind = VarietyKind::steinberg;
  s.tableau = P;
  return s;
}

VarietyPredicate make_predicate(const VarietySpec& spec, int k) {
  VarietyPredicate out{Field::make(spec.p, spec.m, k), {}, {}};
  std::shared_ptr<const UnipotentAction> action;
  if (spec.kind != VarietyKind::full && spec.kind != VarietyKind::dl) {
    if (!spec.u) throw std::invalid_argument("variety needs a unipotent matrix");
    action = std::make_shared<const UnipotentAction>(change_field(*spec.u, out.field));
    out.keep_prefix = [action](const Subspace& s) { return action->stabilises(s); };
  }
  switch (spec.kind) {
    case VarietyKind::full:
      out.contains = [](const Flag&) { return true; };
      break;
    case VarietyKind::springer:
      out.contains = [action](const Flag& f) { return action->stabilises(f); };
      break;
    case VarietyKind::dl: {
      if (!spec.w) throw std::invalid_argument("Deligne-Lusztig variety needs a permutation");
      Perm w = *spec.w;
      out.contains = [w](const Flag& f) { return dl_membership(w, f); };
      break;
    }
    case VarietyKind::intersection: {
      if (!spec.w) throw std::invalid_argument("intersection variety needs a permutation");
      Perm w = *spec.w;
      out.contains = [action, w](const Flag& f) { return action->stabilises(f) && dl_membership(w, f); };
      break;
    }
    case VarietyKind::steinberg: {
      if (!spec.tableau) throw std::invalid_argument("Steinberg cell needs a tableau");
      Tableau P = *spec.tableau;
      out.contains = [action, P](const Flag& f) { return action->stabilises(f) && action->in_steinberg_cell(P, f); };
      break;
    }
  }
  return out;
}

EnumerationOptions with_filter(EnumerationOptions o, const PrefixFilter& extra) {
  if (!extra) return o;
  if (!o.keep_prefix) {
    o.keep_prefix = extra;
  } else {
    auto a = o.keep_prefix;
    o.keep_prefix = [a, extra](const Subspace& s) { return a(s) && extra(s); };
  }
  return o;
}

std::uint64_t count_points(const VarietySpec& spec, int k, const EnumerationOptions& opts) {
  auto pred = make_predicate(spec, k);
  return count_flags_if(spec.n, pred.field, pred.contains, with_filter(opts, pred.keep_prefix));
}

std::vector<Flag> points(const VarietySpec& spec, int k, const EnumerationOptions& opts) {
  auto pred = make_predicate(spec, k);
  const EnumerationOptions o = with_filter(opts, pred.keep_prefix);
  std::vector<Flag> out;
  for_each_flag(spec.n, pred.field, [&](const Flag& f) {
    if (pred.contains(f)) out.push_back(f);
  }, o);
  return out;
}

}  // namespace flagvar
