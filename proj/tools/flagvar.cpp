// Command line front end: normal forms, point counts, enumeration and the
// verification suite. Reports and counts are printed as JSON lines.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "flagvar/harness.hpp"
#include "flagvar/io.hpp"
#include "flagvar/normal_forms.hpp"

using namespace flagvar;
using nlohmann::json;

namespace {

BaseField parse_prime_power(long long q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime(p)) break;
    long long x = q;
    int m = 0;
    while (x % p == 0) {
      x /= p;
      ++m;
    }
    if (x == 1) return {p, m};
    break;
  }
  throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

struct Common {
  long long q = 2;
  std::uint64_t budget = kDefaultFlagBudget;
  unsigned threads = 0;
  std::uint64_t seed = HarnessOptions{}.seed;

  HarnessOptions harness() const {
    HarnessOptions o;
    o.enumeration.budget = budget;
    o.enumeration.threads = threads;
    o.seed = seed;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "Base field size (prime power)")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Maximum number of flags to enumerate")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Counting threads (0 = hardware)")->capture_default_str();
}

int emit(const std::vector<Report>& reports) {
  for (const auto& r : reports) std::cout << r.to_json().dump() << '\n';
  return all_pass(reports) ? 0 : 1;
}

struct VarietyArgs {
  std::string kind = "full";
  int n = 0;
  int k = 1;
  std::string w, partition, tableau, matrix;
};

void add_variety(CLI::App* cmd, VarietyArgs& v) {
  cmd->add_option("--kind", v.kind, "full | springer | dl | intersection | steinberg")
      ->check(CLI::IsMember({"full", "springer", "dl", "intersection", "steinberg"}));
  cmd->add_option("--n", v.n, "Rank (taken from w, the partition or the matrix when omitted)");
  cmd->add_option("--k", v.k, "Count points over GF(q^k)")->capture_default_str();
  cmd->add_option("--w", v.w, "Permutation, e.g. 2,1,4,3");
  cmd->add_option("--partition", v.partition, "Jordan type; u is its Weyr form");
  cmd->add_option("--tableau", v.tableau, "Steinberg cell tableau, e.g. 1,3;2,4");
  cmd->add_option("--matrix", v.matrix, "Unipotent matrix file (overrides --partition)");
}

VarietySpec build_spec(const VarietyArgs& v, BaseField base) {
  std::optional<Mat> u;
  if (!v.matrix.empty()) {
    u = read_matrix_file(v.matrix);
    if (u->field().p() != base.p || u->field().m() != base.m)
      throw std::invalid_argument("matrix field does not match --q");
  } else if (!v.partition.empty()) {
    u = weyr_matrix(parse_partition(v.partition), Field::make(base.p, base.m, 1));
  }
  std::optional<Perm> w;
  if (!v.w.empty()) w = parse_perm(v.w);
  auto need_u = [&]() -> const Mat& {
    if (!u) throw std::invalid_argument("--kind " + v.kind + " needs --partition or --matrix");
    return *u;
  };
  auto need_w = [&]() -> const Perm& {
    if (!w) throw std::invalid_argument("--kind " + v.kind + " needs --w");
    return *w;
  };
  VarietySpec spec;
  if (v.kind == "full") {
    int n = v.n;
    if (n == 0 && w) n = w->size();
    if (n == 0 && u) n = u->rows();
    if (n <= 0) throw std::invalid_argument("--kind full needs --n");
    spec = VarietySpec::full(n, base.p, base.m);
  } else if (v.kind == "springer") {
    spec = VarietySpec::springer(need_u());
  } else if (v.kind == "dl") {
    spec = VarietySpec::dl(need_w(), base.p, base.m);
  } else if (v.kind == "intersection") {
    spec = VarietySpec::intersection(need_u(), need_w());
  } else {
    if (v.tableau.empty()) throw std::invalid_argument("--kind steinberg needs --tableau");
    spec = VarietySpec::steinberg(need_u(), parse_tableau(v.tableau));
  }
  if (v.n != 0 && v.n != spec.n) throw std::invalid_argument("--n disagrees with the other arguments");
  return spec;
}

json spec_json(const VarietyArgs& v, const VarietySpec& spec, BaseField base) {
  json out{{"kind", v.kind}, {"n", spec.n}, {"q", base.q()}, {"k", v.k}};
  if (spec.w) out["w"] = format_perm(*spec.w);
  if (spec.u) out["jordan"] = format_partition(jordan_type(*spec.u));
  if (spec.tableau) out["tableau"] = format_tableau(*spec.tableau);
  return out;
}

std::vector<Partition> all_partitions_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

void append(std::vector<Report>& to, std::vector<Report> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flags over finite fields: Weyr forms, Robinson-Schensted, Springer fibres and Deligne-Lusztig "
               "varieties by point counting"};
  app.require_subcommand(1);

  // weyr
  std::string partition_arg, field_arg = "2,1,1";
  auto* weyr = app.add_subcommand("weyr", "Print the Weyr form of a partition as a matrix file");
  weyr->add_option("--partition", partition_arg, "Jordan type, e.g. 2,2")->required();
  weyr->add_option("--field", field_arg, "p,m,k")->capture_default_str();

  // jordan, beta
  std::string matrix_arg;
  auto* jordan = app.add_subcommand("jordan", "Jordan type and column lengths of a unipotent matrix");
  jordan->add_option("--matrix", matrix_arg, "Matrix file")->required();
  auto* beta = app.add_subcommand("beta", "The involution attached to a unipotent matrix");
  beta->add_option("--matrix", matrix_arg, "Matrix file")->required();

  // count, enumerate
  Common common;
  VarietyArgs variety;
  auto* count = app.add_subcommand("count", "Number of GF(q^k)-points of a variety of flags");
  add_common(count, common);
  add_variety(count, variety);
  std::string emit_path;
  auto* enumerate = app.add_subcommand("enumerate", "List the GF(q^k)-points as JSON lines");
  add_common(enumerate, common);
  add_variety(enumerate, variety);
  enumerate->add_option("--emit", emit_path, "Output file (stdout when omitted)");

  // lefschetz
  int d = 2, r = 2, k = 1;
  std::string w_arg, g_path;
  auto* lefschetz = app.add_subcommand("lefschetz", "Fixed points of g composed with F^k on B_u cap X_w");
  add_common(lefschetz, common);
  lefschetz->add_option("--d", d, "Series matrix size")->capture_default_str();
  lefschetz->add_option("--r", r, "Truncation order")->capture_default_str();
  lefschetz->add_option("--w", w_arg, "Permutation")->required();
  lefschetz->add_option("--g", g_path, "Series file: r blocks of d rows, A_0 first")->required();
  lefschetz->add_option("--k", k, "Frobenius power")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification checks; exit status 1 when one fails");
  verify->require_subcommand(1);
  int k_max = 2, n_max = 3, samples = 200;
  std::string blocks_arg, P_arg, Q_arg;
  bool json_flag = false;
  auto verify_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = verify->add_subcommand(name, help);
    add_common(c, common);
    c->add_option("--seed", common.seed, "Seed for random inputs")->capture_default_str();
    c->add_flag("--json", json_flag, "Output JSON lines (always on)");
    return c;
  };
  auto* v_a = verify_cmd("thm-a", "Springer fibre of the Weyr form meets X_beta in one component");
  v_a->add_option("--partition", partition_arg)->required();
  v_a->add_option("--kmax", k_max)->capture_default_str();
  auto* v_b = verify_cmd("thm-b", "Components of X_w lie in conjugate Springer fibres");
  v_b->add_option("--blocks", blocks_arg, "Reversal block sizes, e.g. 2,2");
  v_b->add_option("--w", w_arg, "Block-reversal permutation");
  v_b->add_option("--kmax", k_max)->capture_default_str();
  auto* v_dims = verify_cmd("dims", "Centralizer dimension and dimension identity");
  v_dims->add_option("--n-max", n_max)->capture_default_str();
  auto* v_part = verify_cmd("partition", "Deligne-Lusztig varieties partition the flag variety");
  int n_arg = 3;
  v_part->add_option("--n", n_arg)->capture_default_str();
  v_part->add_option("--k", k)->capture_default_str();
  auto* v_rel = verify_cmd("relpos", "Modal relative position over a pair of Steinberg cells");
  v_rel->add_option("--partition", partition_arg)->required();
  v_rel->add_option("--P", P_arg, "Tableau")->required();
  v_rel->add_option("--Q", Q_arg, "Tableau")->required();
  v_rel->add_option("--k", k)->capture_default_str();
  auto* v_lab = verify_cmd("labelling", "Steinberg cells against Spaltenstein labels");
  v_lab->add_option("--n", n_arg)->capture_default_str();
  v_lab->add_option("--kmax", k_max)->capture_default_str();
  auto* v_ser = verify_cmd("series", "Truncated series embedding and its action");
  v_ser->add_option("--kmax", k_max)->capture_default_str();
  v_ser->add_option("--samples", samples)->capture_default_str();
  auto* v_all = verify_cmd("all", "Every check up to the given sizes");
  v_all->add_option("--n-max", n_max)->capture_default_str();
  v_all->add_option("--kmax", k_max)->capture_default_str();

  // examples
  auto* examples = app.add_subcommand("examples", "Worked examples: counts and Steinberg cells");
  add_common(examples, common);
  examples->add_option("--kmax", k_max)->capture_default_str();
  examples->add_option("--n-max", n_max, "Largest n for the longest-element emptiness check")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*weyr) {
      std::cout << format_matrix(weyr_matrix(parse_partition(partition_arg), parse_field(field_arg)));
      return 0;
    }
    if (*jordan) {
      const auto data = analyze_unipotent(read_matrix_file(matrix_arg));
      std::cout << json{{"jordan", format_partition(data.jordan)},
                        {"columns", format_partition(Partition(data.columns))}}.dump()
                << '\n';
      return 0;
    }
    if (*beta) {
      const Mat u = read_matrix_file(matrix_arg);
      std::cout << json{{"jordan", format_partition(jordan_type(u))}, {"beta", format_perm(beta_of_unipotent(u))}}.dump()
                << '\n';
      return 0;
    }
    const BaseField base = parse_prime_power(common.q);
    const HarnessOptions hopts = common.harness();
    if (*count) {
      const auto spec = build_spec(variety, base);
      json out = spec_json(variety, spec, base);
      out["count"] = count_points(spec, variety.k, hopts.enumeration);
      std::cout << out.dump() << '\n';
      return 0;
    }
    if (*enumerate) {
      const auto spec = build_spec(variety, base);
      std::ofstream file;
      if (!emit_path.empty()) {
        file.open(emit_path);
        if (!file) throw std::invalid_argument("cannot write " + emit_path);
      }
      std::ostream& sink = emit_path.empty() ? std::cout : file;
      const auto pred = make_predicate(spec, variety.k);
      std::uint64_t emitted = 0;
      for_each_flag(spec.n, pred.field, [&](const Flag& f) {
        if (!pred.contains(f)) return;
        sink << flag_to_json(f) << '\n';
        ++emitted;
      }, with_filter(hopts.enumeration, pred.keep_prefix));
      if (!emit_path.empty()) {
        json out = spec_json(variety, spec, base);
        out["count"] = emitted;
        out["emitted_to"] = emit_path;
        std::cout << out.dump() << '\n';
      }
      return 0;
    }
    if (*lefschetz) {
      const Field f = Field::make(base.p, base.m, 1);
      const auto g = read_series_file(g_path, f);
      if (g.d() != d || g.r() != r) throw std::invalid_argument("series file shape differs from --d/--r");
      const Partition lambda(std::vector<int>(d, r));
      const Perm w = parse_perm(w_arg);
      std::cout << json{{"d", d}, {"r", r}, {"q", base.q()}, {"k", k}, {"w", format_perm(w)},
                        {"order", multiplicative_order(g)},
                        {"count", lefschetz_count(lambda, w, g, k, hopts.enumeration)}}.dump()
                << '\n';
      return 0;
    }
    if (*examples) return emit(reproduce_examples(base, k_max, n_max, hopts));
    if (*v_a) return emit(verify_theorem_a(parse_partition(partition_arg), base, k_max, hopts));
    if (*v_b) {
      std::vector<int> blocks;
      if (!blocks_arg.empty()) {
        blocks = parse_partition(blocks_arg).parts();
      } else if (!w_arg.empty()) {
        const auto parsed = parse_block_reversal(parse_perm(w_arg));
        if (!parsed) throw std::invalid_argument("w is not a concatenation of reversed blocks");
        blocks = parsed->sizes;
      } else {
        throw std::invalid_argument("thm-b needs --blocks or --w");
      }
      return emit(verify_theorem_b(blocks, base, k_max, hopts));
    }
    if (*v_dims) return emit(verify_dimensions(n_max, base));
    if (*v_part) return emit({partition_sum_check(n_arg, base, k, hopts)});
    if (*v_rel) {
      return emit({generic_relpos_histogram(parse_partition(partition_arg), parse_tableau(P_arg), parse_tableau(Q_arg),
                                            base, k, hopts)});
    }
    if (*v_lab) return emit(verify_labelling(n_arg, base, k_max, hopts));
    if (*v_ser) return emit(verify_series_action(base, k_max, samples, hopts));
    if (*v_all) {
      std::vector<Report> reports;
      for (const auto& lambda : all_partitions_up_to(n_max)) {
        append(reports, verify_theorem_a(lambda, base, k_max, hopts));
        append(reports, verify_theorem_b(lambda.conjugate(), base, k_max, hopts));
      }
      append(reports, verify_dimensions(n_max, base));
      for (int n = 1; n <= n_max; ++n) {
        for (int kk = 1; kk <= k_max; ++kk) reports.push_back(partition_sum_check(n, base, kk, hopts));
        append(reports, verify_labelling(n, base, k_max, hopts));
      }
      for (const auto& lambda : all_partitions_up_to(n_max)) {
        const auto tableaux = enumerate_standard_tableaux(lambda);
        for (const auto& P : tableaux)
          for (const auto& Q : tableaux) reports.push_back(generic_relpos_histogram(lambda, P, Q, base, k_max, hopts));
      }
      append(reports, verify_series_action(base, k_max, samples, hopts));
      append(reports, reproduce_examples(base, k_max, std::min(n_max, 4), hopts));
      return emit(reports);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
