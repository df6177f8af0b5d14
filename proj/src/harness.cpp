#include "flagvar/harness.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>

#include "flagvar/io.hpp"
#include "flagvar/normal_forms.hpp"

namespace flagvar {

using nlohmann::json;

json Report::to_json() const {
  return json{{"claim_id", claim_id}, {"params", params},  {"expected", expected},
              {"actual", actual},     {"pass", pass},      {"runtime_ms", runtime_ms}};
}

std::uint64_t BaseField::q() const {
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= static_cast<std::uint64_t>(p);
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

namespace {

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report finish(Report r, const Stopwatch& sw) {
  r.pass = r.expected == r.actual;
  r.runtime_ms = sw.ms();
  return r;
}

json base_params(BaseField base) { return json{{"p", base.p}, {"m", base.m}, {"q", base.q()}}; }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// Dimensions c_1, c_1 + c_2, ... of the proper subspaces in the component index.
std::vector<int> index_dims(const Partition& lambda) {
  std::vector<int> dims;
  int acc = 0;
  const auto c = lambda.conjugate();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) dims.push_back(acc += c[i]);
  return dims;
}

// |X_{w_0}(GF(q^k))| for GL_c, cached per (c, k).
class LongestCounts {
 public:
  LongestCounts(BaseField base, const EnumerationOptions& opts) : base_(base), opts_(opts) {}

  std::uint64_t get(int c, int k) {
    auto [it, fresh] = cache_.try_emplace({c, k}, 0);
    if (fresh) it->second = count_points(VarietySpec::dl(Perm::longest(c), base_.p, base_.m), k, opts_);
    return it->second;
  }

  std::uint64_t product(const Partition& lambda, int k) {
    std::uint64_t out = 1;
    for (int c : lambda.conjugate()) out *= get(c, k);
    return out;
  }

 private:
  BaseField base_;
  EnumerationOptions opts_;
  std::map<std::pair<int, int>, std::uint64_t> cache_;
};

std::uint64_t rational_partial_flags(BaseField base, const Partition& lambda) {
  return count_partial_flags(Field::make(base.p, base.m, 1), lambda.size(), index_dims(lambda));
}

// Rational g whose first c_1 + ... + c_i columns span the i-th subspace of idx.
Mat adapted_conjugator(const std::vector<Subspace>& idx, const Field& f, int n) {
  EchelonBasis seen(f, n);
  std::vector<std::vector<Elem>> cols;
  auto offer = [&](std::span<const Elem> v) {
    if (seen.insert(v)) cols.emplace_back(v.begin(), v.end());
  };
  for (const auto& s : idx)
    for (int r = 0; r < s.dim(); ++r) offer(s.basis().row(r));
  const Mat id = Mat::identity(f, n);
  for (int i = 0; i < n; ++i) offer(id.row(i));
  Mat g(f, n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) g(r, c) = cols[c][r];
  return g;
}

Mat conjugate_by(const Mat& g, const Mat& u) { return g * u * *g.inverse(); }

// Membership tallies over the points of X_beta for one unipotent u.
struct CellTally {
  UnipotentAction action;
  std::vector<Subspace> target;
  std::uint64_t in_springer = 0, in_cell = 0, standard = 0, disagree = 0, springer_outside = 0;

  CellTally(const Mat& u, std::vector<Subspace> t) : action(u), target(std::move(t)) {}

  void visit(const Flag& f, const Tableau& T, const std::vector<Subspace>* idx) {
    const bool a = action.stabilises(f);
    const bool b = a && action.in_steinberg_cell(T, f);
    const bool c = idx && *idx == target;
    in_springer += a;
    in_cell += b;
    standard += c;
    disagree += (a != b || a != c);
    springer_outside += (a && !c);
  }

  json summary(std::uint64_t index_errors) const {
    return json{{"springer_points", in_springer}, {"steinberg_points", in_cell}, {"standard_index_points", standard},
                {"disagreeing_points", disagree}, {"springer_points_outside_component", springer_outside},
                {"index_errors", index_errors}};
  }
};

json expected_cells(std::uint64_t size) {
  return json{{"springer_points", size}, {"steinberg_points", size}, {"standard_index_points", size},
              {"disagreeing_points", 0},  {"springer_points_outside_component", 0}, {"index_errors", 0}};
}

}  // namespace

std::vector<Report> verify_theorem_a(const Partition& lambda, BaseField base, int k_max, const HarnessOptions& opts) {
  const int n = lambda.size();
  const Perm beta = beta_word(lambda);
  const Tableau T = column_superstandard_tableau(lambda);
  const Field rational = Field::make(base.p, base.m, 1);
  LongestCounts longest(base, opts.enumeration);
  const std::uint64_t classes = rational_partial_flags(base, lambda);

  std::mt19937_64 rng(opts.seed);
  const Mat g0 = random_rational_invertible(rational, n, rng);

  std::vector<Report> out;
  for (int k = 1; k <= k_max; ++k) {
    Stopwatch sw;
    const Field f = Field::make(base.p, base.m, k);
    const Mat u = weyr_matrix(lambda, f);
    const Mat g = change_field(g0, f);
    const auto standard = standard_component_index(f, lambda);
    std::vector<Subspace> moved;
    for (const auto& s : standard) moved.push_back(image(g, s));
    CellTally plain(u, standard), conj(conjugate_by(g, u), moved);

    std::uint64_t total = 0, index_errors = 0;
    for_each_flag(n, f, [&](const Flag& fl) {
      if (!dl_membership(beta, fl)) return;
      ++total;
      std::optional<std::vector<Subspace>> idx;
      try {
        idx = component_index(fl, lambda);
      } catch (const std::domain_error&) {
        ++index_errors;
      }
      plain.visit(fl, T, idx ? &*idx : nullptr);
      conj.visit(fl, T, idx ? &*idx : nullptr);
    }, opts.enumeration);

    json params = base_params(base);
    params["partition"] = format_partition(lambda);
    params["k"] = k;
    params["beta"] = format_perm(beta);
    params["tableau"] = format_tableau(T);

    const std::uint64_t component = longest.product(lambda, k);
    Report r{"springer-meets-one-component", params, expected_cells(component), plain.summary(index_errors)};
    r.params["u"] = "weyr";
    r.params["expected_source"] = "product of |X_{w0}| over GL_{c_i}";
    out.push_back(finish(std::move(r), sw));

    Report rc{"springer-meets-one-component", params, expected_cells(component), conj.summary(index_errors)};
    rc.params["u"] = "random rational conjugate of weyr";
    rc.params["seed"] = opts.seed;
    rc.params["conjugator"] = format_matrix(g0);
    out.push_back(finish(std::move(rc), sw));

    Report d{"component-decomposition", params, classes * component, total};
    d.params["rational_partial_flags"] = classes;
    d.params["component_points"] = component;
    out.push_back(finish(std::move(d), sw));
  }
  return out;
}

std::vector<Report> verify_theorem_b(const std::vector<int>& blocks, BaseField base, int k_max,
                                     const HarnessOptions& opts) {
  if (blocks.empty()) throw std::invalid_argument("no blocks given");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] < 1) throw std::invalid_argument("block sizes must be positive");
    if (i && blocks[i] > blocks[i - 1])
      throw std::invalid_argument("block sizes are not weakly decreasing; outside the scope of the check");
  }
  const Partition lambda = partition_from_columns(blocks);
  const int n = lambda.size();
  const Perm w = beta_word(lambda);
  LongestCounts longest(base, opts.enumeration);
  const std::uint64_t classes = rational_partial_flags(base, lambda);

  std::vector<Report> out;
  for (int k = 1; k <= k_max; ++k) {
    Stopwatch sw;
    const Field f = Field::make(base.p, base.m, k);
    const Mat u = weyr_matrix(lambda, f);
    struct Class {
      std::unique_ptr<UnipotentAction> action;
      std::uint64_t points = 0, outside = 0;
    };
    std::map<std::vector<Subspace>, Class> groups;
    std::uint64_t total = 0, index_errors = 0;
    for_each_flag(n, f, [&](const Flag& fl) {
      if (!dl_membership(w, fl)) return;
      ++total;
      std::vector<Subspace> idx;
      try {
        idx = component_index(fl, lambda);
      } catch (const std::domain_error&) {
        ++index_errors;
        return;
      }
      auto& c = groups[idx];
      if (!c.action) c.action = std::make_unique<UnipotentAction>(conjugate_by(adapted_conjugator(idx, f, n), u));
      ++c.points;
      c.outside += !c.action->stabilises(fl);
    }, opts.enumeration);

    std::uint64_t outside = 0;
    for (const auto& [idx, c] : groups) outside += c.outside;
    const std::uint64_t component = longest.product(lambda, k);
    const std::uint64_t expected_classes = component > 0 ? classes : 0;

    json params = base_params(base);
    params["blocks"] = format_partition(Partition(blocks));
    params["w"] = format_perm(w);
    params["k"] = k;
    params["rational_partial_flags"] = classes;
    params["component_points"] = component;
    Report r{"component-in-conjugate-springer-fibre", params,
             json{{"classes", expected_classes}, {"points", classes * component}, {"points_outside_fibre", 0},
                  {"index_errors", 0}},
             json{{"classes", groups.size()}, {"points", total}, {"points_outside_fibre", outside},
                  {"index_errors", index_errors}}};
    out.push_back(finish(std::move(r), sw));
  }
  return out;
}

std::vector<Report> verify_dimensions(int n_max, BaseField base) {
  const Field f = Field::make(base.p, base.m, 1);
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Stopwatch sw;
      const auto c = lambda.conjugate();
      int squares = 0, pairs = 0;
      for (int x : c) {
        squares += x * x;
        pairs += x * (x - 1) / 2;
      }
      const Mat u = jordan_matrix(lambda, f);
      const int cdim = centralizer_dim(u);
      json params = base_params(base);
      params["partition"] = format_partition(lambda);
      out.push_back(finish(Report{"centralizer-dimension", params, squares, cdim}, sw));

      Stopwatch sw2;
      const Tableau T = column_superstandard_tableau(lambda);
      const int via_rs = rs_extract(T, T).length();
      const int half_codim = n * (n - 1) / 2 - (n * n - cdim) / 2;
      Report d{"dimension-identity", params, json{{"half_codimension", via_rs}, {"column_pairs", via_rs},
                                                  {"beta_length", via_rs}},
               json{{"half_codimension", half_codim}, {"column_pairs", pairs},
                    {"beta_length", beta_of_unipotent(u).length()}}};
      d.params["expected_source"] = "length of w(T, T)";
      out.push_back(finish(std::move(d), sw2));
    }
  }
  return out;
}

Report partition_sum_check(int n, BaseField base, int k, const HarnessOptions& opts) {
  Stopwatch sw;
  const Field f = Field::make(base.p, base.m, k);
  const auto perms = all_permutations(n);
  std::vector<std::uint64_t> per_w(perms.size(), 0);
  std::uint64_t total = 0, exactly_one = 0;
  for_each_flag(n, f, [&](const Flag& fl) {
    const auto dims = intersection_dims(fl, fl.frobenius());
    int hits = 0;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (in_relative_position(dims, perms[i])) {
        ++per_w[i];
        ++hits;
      }
    }
    ++total;
    exactly_one += hits == 1;
  }, opts.enumeration);
  std::uint64_t summed = 0;
  json counts = json::object();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    summed += per_w[i];
    counts[format_perm(perms[i])] = per_w[i];
  }
  const std::uint64_t expected = flag_count(n, f.size());
  json params = base_params(base);
  params["n"] = n;
  params["k"] = k;
  params["counts"] = counts;
  params["expected_source"] = "Gaussian factorial";
  Report r{"flag-variety-partition", params,
           json{{"sum_over_w", expected}, {"flags", expected}, {"flags_in_exactly_one", expected}},
           json{{"sum_over_w", summed}, {"flags", total}, {"flags_in_exactly_one", exactly_one}}};
  return finish(std::move(r), sw);
}

std::vector<Report> reproduce_examples(BaseField base, int k_max, int n_max, const HarnessOptions& opts) {
  std::vector<Report> out;
  const auto& eo = opts.enumeration;
  const Field rational = Field::make(base.p, base.m, 1);

  {
    Stopwatch sw;
    const Tableau P({{1, 3}, {2, 4}}), Q({{1, 2}, {3, 4}});
    const Perm wp = rs_extract(P, P), wq = rs_extract(Q, Q);
    json params = base_params(base);
    params["P"] = format_tableau(P);
    params["Q"] = format_tableau(Q);
    out.push_back(finish(Report{"two-by-two-words", params,
                                json{{"w(P,P)", "2,1,4,3"}, {"w(Q,Q)", "3,4,1,2"}, {"l(w(P,P))", 2}, {"l(w(Q,Q))", 4}},
                                json{{"w(P,P)", format_perm(wp)}, {"w(Q,Q)", format_perm(wq)},
                                     {"l(w(P,P))", wp.length()}, {"l(w(Q,Q))", wq.length()}}},
                         sw));
  }

  const std::uint64_t grassmannian = enumerate_subspaces(rational, 4, 2).size();
  const Perm w2143({2, 1, 4, 3});
  const Mat u22 = weyr_matrix(Partition({2, 2}), rational);
  const Mat u21 = weyr_matrix(Partition({2, 1}), rational);
  const Tableau hook_p({{1, 3}, {2}}), hook_q({{1, 2}, {3}});
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t x = ipow(base.q(), k) - base.q();
    json params = base_params(base);
    params["k"] = k;
    {
      Stopwatch sw;
      Report r{"two-by-two-counts", params, json{{"X_2143", grassmannian * x * x}, {"B_u_cap_X_2143", x * x}},
               json{{"X_2143", count_points(VarietySpec::dl(w2143, base.p, base.m), k, eo)},
                    {"B_u_cap_X_2143", count_points(VarietySpec::intersection(u22, w2143), k, eo)}}};
      r.params["rational_2_planes_in_4_space"] = grassmannian;
      out.push_back(finish(std::move(r), sw));
    }
    {
      Stopwatch sw;
      const Field f = Field::make(base.p, base.m, k);
      const UnipotentAction action(change_field(u21, f));
      const auto a = points(VarietySpec::intersection(u21, Perm({2, 1, 3})), k, eo);
      const auto b = points(VarietySpec::intersection(u21, Perm({1, 3, 2})), k, eo);
      std::uint64_t a_in = 0, b_in = 0;
      for (const auto& fl : a) a_in += action.in_steinberg_cell(hook_p, fl);
      for (const auto& fl : b) b_in += action.in_steinberg_cell(hook_q, fl);
      Report r{"hook-intersections", params,
               json{{"B_u_cap_X_213", x}, {"in_C(P)", x}, {"B_u_cap_X_132", x}, {"in_C(Q)", x}},
               json{{"B_u_cap_X_213", a.size()}, {"in_C(P)", a_in}, {"B_u_cap_X_132", b.size()}, {"in_C(Q)", b_in}}};
      r.params["P"] = format_tableau(hook_p);
      r.params["Q"] = format_tableau(hook_q);
      out.push_back(finish(std::move(r), sw));
    }
    for (int n = 2; n <= n_max; ++n) {
      Stopwatch sw;
      json expected = json::object(), actual = json::object();
      for (const auto& lambda : partitions_of(n)) {
        if (lambda.length() == n) continue;  // u = 1
        const Mat u = weyr_matrix(lambda, rational);
        expected[format_partition(lambda)] = 0;
        actual[format_partition(lambda)] = count_points(VarietySpec::intersection(u, Perm::longest(n)), k, eo);
      }
      Report r{"longest-element-misses-nontrivial-fibres", params, expected, actual};
      r.params["n"] = n;
      out.push_back(finish(std::move(r), sw));
    }
  }
  return out;
}

Report generic_relpos_histogram(const Partition& lambda, const Tableau& P, const Tableau& Q, BaseField base, int k,
                                const HarnessOptions& opts) {
  Stopwatch sw;
  if (P.shape() != lambda || Q.shape() != lambda) throw std::invalid_argument("tableau shapes differ from the partition");
  const Mat u = weyr_matrix(lambda, Field::make(base.p, base.m, 1));
  const auto a = points(VarietySpec::steinberg(u, P), k, opts.enumeration);
  const auto b = points(VarietySpec::steinberg(u, Q), k, opts.enumeration);
  if (a.empty() || b.empty()) throw std::runtime_error("empty Steinberg cell sample; increase k");
  std::map<Perm, std::uint64_t> hist;
  for (const auto& x : a)
    for (const auto& y : b) ++hist[relative_position(x, y)];
  std::uint64_t best = 0;
  std::vector<Perm> modes;
  json histogram = json::object();
  for (const auto& [w, c] : hist) {
    histogram[format_perm(w)] = c;
    if (c > best) {
      best = c;
      modes = {w};
    } else if (c == best) {
      modes.push_back(w);
    }
  }
  json params = base_params(base);
  params["partition"] = format_partition(lambda);
  params["P"] = format_tableau(P);
  params["Q"] = format_tableau(Q);
  params["k"] = k;
  params["pairs"] = a.size() * b.size();
  params["histogram"] = histogram;
  Report r{"generic-relative-position", params, json{{"mode", format_perm(rs_extract(P, Q))}, {"unique_mode", true}},
           json{{"mode", format_perm(modes.front())}, {"unique_mode", modes.size() == 1}}};
  return finish(std::move(r), sw);
}

namespace {

TruncatedSeriesMat random_series(const Field& f, int d, int r, std::mt19937_64& rng) {
  std::vector<Mat> c;
  for (int i = 0; i < r; ++i) c.push_back(random_rational(f, d, d, rng));
  return TruncatedSeriesMat(std::move(c));
}

TruncatedSeriesMat random_unit(const Field& f, int d, int r, std::mt19937_64& rng) {
  auto a = random_series(f, d, r, rng);
  std::vector<Mat> c = a.coeffs();
  c[0] = random_rational_invertible(f, d, rng);
  return TruncatedSeriesMat(std::move(c));
}

}  // namespace

std::vector<Report> verify_series_action(BaseField base, int k_max, int samples, const HarnessOptions& opts) {
  const Field f = Field::make(base.p, base.m, 1);
  std::mt19937_64 rng(opts.seed);
  std::vector<Report> out;
  {
    Stopwatch sw;
    std::uniform_int_distribution<int> size(1, 3);
    std::uint64_t add_fail = 0, mul_fail = 0, commute_fail = 0;
    for (int s = 0; s < samples; ++s) {
      const int d = size(rng), r = size(rng);
      const auto a = random_series(f, d, r, rng), b = random_series(f, d, r, rng);
      add_fail += !(embed(a + b) == embed(a) + embed(b));
      mul_fail += !(embed(a * b) == embed(a) * embed(b));
      commute_fail += !centralizer_check(Partition(std::vector<int>(d, r)), a);
    }
    json params = base_params(base);
    params["samples"] = samples;
    params["seed"] = opts.seed;
    out.push_back(finish(Report{"series-embedding", params,
                                json{{"additive_failures", 0}, {"multiplicative_failures", 0}, {"non_commuting", 0}},
                                json{{"additive_failures", add_fail}, {"multiplicative_failures", mul_fail},
                                     {"non_commuting", commute_fail}}},
                         sw));
  }

  const Partition lambda({2, 2});
  const Perm w = beta_word(lambda);
  const Mat u = weyr_matrix(lambda, f);
  std::vector<TruncatedSeriesMat> units{TruncatedSeriesMat::identity(f, 2, 2)};
  for (int s = 0; s < 8; ++s) units.push_back(random_unit(f, 2, 2, rng));
  for (int k = 1; k <= k_max; ++k) {
    Stopwatch sw;
    const auto pts = points(VarietySpec::intersection(u, w), k, opts.enumeration);
    std::set<Flag> set(pts.begin(), pts.end());
    std::uint64_t escaped = 0;
    for (const auto& g : units)
      for (const auto& fl : pts) escaped += !set.count(act_on_flag(g, fl));
    const std::uint64_t x = ipow(base.q(), k) - base.q();
    json params = base_params(base);
    params["k"] = k;
    params["w"] = format_perm(w);
    params["units"] = units.size();
    params["seed"] = opts.seed;
    out.push_back(finish(Report{"series-action-preserves-intersection", params,
                                json{{"points", x * x}, {"escaped_images", 0}},
                                json{{"points", pts.size()}, {"escaped_images", escaped}}},
                         sw));

    Stopwatch sw2;
    const auto one = TruncatedSeriesMat::identity(f, 2, 2);
    const Elem a = f.base_elements().back();
    Report lr{"lefschetz-trivial-twist", params,
              json{{"identity", pts.size()}, {"scalar", pts.size()}},
              json{{"identity", lefschetz_count(lambda, w, one, k, opts.enumeration)},
                   {"scalar", lefschetz_count(lambda, w, TruncatedSeriesMat::scalar(f, 2, 2, a), k, opts.enumeration)}}};
    lr.params["scalar"] = format_scalar(f, a);
    out.push_back(finish(std::move(lr), sw2));
  }

  {
    Stopwatch sw;
    const TruncatedSeriesMat swap({Mat::from_ints(f, {{0, 1}, {1, 0}}), Mat(f, 2, 2)});
    const auto h = random_unit(f, 2, 2, rng);
    const auto conj = h * swap * *h.inverse();
    json params = base_params(base);
    params["k"] = 1;
    params["g"] = format_series(swap);
    params["h"] = format_series(h);
    const auto direct = lefschetz_count(lambda, w, swap, 1, opts.enumeration);
    json expected = json{{"conjugate", direct}};
    json actual = json{{"conjugate", lefschetz_count(lambda, w, conj, 1, opts.enumeration)}};
    if (base.p == 2 && base.m == 1) {
      // Hand count: each of the two P^1 factors contributes the x with x^3 = 1, x != 1.
      expected["swap"] = 4;
      actual["swap"] = direct;
      params["expected_source"] = "archived constant for swap; conjugate compared with swap";
    }
    out.push_back(finish(Report{"lefschetz-twisted", params, expected, actual}, sw));
  }
  return out;
}

std::vector<Report> verify_labelling(int n, BaseField base, int k_max, const HarnessOptions& opts) {
  std::vector<Report> out;
  const Field rational = Field::make(base.p, base.m, 1);
  for (const auto& lambda : partitions_of(n)) {
    const auto tableaux = enumerate_standard_tableaux(lambda);
    const Mat u = weyr_matrix(lambda, rational);
    for (int k = 1; k <= k_max; ++k) {
      Stopwatch sw;
      const UnipotentAction action(change_field(u, Field::make(base.p, base.m, k)));
      const auto pts = points(VarietySpec::springer(u), k, opts.enumeration);
      std::uint64_t one_cell = 0, agree = 0;
      for (const auto& fl : pts) {
        int cells = 0;
        bool labelled = false;
        const Tableau label = action.spaltenstein_tableau(fl);
        for (const auto& P : tableaux) {
          if (action.in_steinberg_cell(P, fl)) {
            ++cells;
            labelled = labelled || P == label;
          }
        }
        one_cell += cells == 1;
        agree += cells == 1 && labelled;
      }
      json params = base_params(base);
      params["partition"] = format_partition(lambda);
      params["k"] = k;
      params["springer_points"] = pts.size();
      out.push_back(finish(Report{"steinberg-cell-matches-spaltenstein", params,
                                  json{{"in_exactly_one_cell", pts.size()}, {"label_agrees", pts.size()}},
                                  json{{"in_exactly_one_cell", one_cell}, {"label_agrees", agree}}},
                           sw));
    }
  }
  return out;
}

}  // namespace flagvar
