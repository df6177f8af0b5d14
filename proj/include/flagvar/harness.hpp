#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "flagvar/padic.hpp"

namespace flagvar {

/// One checked claim. `expected` always comes from a path independent of
/// the enumeration producing `actual` (closed formula, smaller enumeration,
/// or an archived constant, in which case params.expected_source says so).
struct Report {
  std::string claim_id;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
  std::int64_t runtime_ms = 0;

  nlohmann::json to_json() const;
};

/// Base field GF(p^m) for the checks; points are taken over GF(q^k).
struct BaseField {
  int p = 2;
  int m = 1;
  std::uint64_t q() const;
};

struct HarnessOptions {
  EnumerationOptions enumeration;
  std::uint64_t seed = 20240601;
};

/// For u the Weyr form of lambda and each k <= k_max: B_u cap X_beta,
/// C(T) cap X_beta and the points of X_beta with standard component index
/// are one set, of the size predicted by the GL_{c_i} factors; the count of
/// X_beta factors as |(G/P)^F| times that product. The set check is repeated
/// for a seeded random rational conjugate of u.
std::vector<Report> verify_theorem_a(const Partition& lambda, BaseField base, int k_max,
                                     const HarnessOptions& opts = {});

/// w given by weakly decreasing reversal blocks. Groups the points of X_w by
/// component index and checks each class lies in the Springer fibre of the
/// matching rational conjugate of the Weyr form. Throws
/// std::invalid_argument when the blocks are not weakly decreasing.
std::vector<Report> verify_theorem_b(const std::vector<int>& blocks, BaseField base, int k_max,
                                     const HarnessOptions& opts = {});

/// Centralizer dimension and the dimension identity for every partition of
/// n <= n_max.
std::vector<Report> verify_dimensions(int n_max, BaseField base);

/// The X_w partition the flag variety over GF(q^k).
Report partition_sum_check(int n, BaseField base, int k, const HarnessOptions& opts = {});

/// The three worked examples (n = 4 two-by-two case, n = 3 hook case,
/// emptiness of B_u cap X_{w_0} for u != 1 up to n_max).
std::vector<Report> reproduce_examples(BaseField base, int k_max, int n_max = 4, const HarnessOptions& opts = {});

/// Histogram of relative positions over C(P) x C(Q); passes when the unique
/// modal value is w(P, Q). Throws std::runtime_error on an empty sample.
Report generic_relpos_histogram(const Partition& lambda, const Tableau& P, const Tableau& Q, BaseField base, int k,
                                const HarnessOptions& opts = {});

/// Ring homomorphism and centralizer property of the series embedding on
/// seeded random inputs, stability of B_{W(u),w} under rational units for
/// (d, r) = (2, 2) and w the matching beta, and the identity Lefschetz count.
std::vector<Report> verify_series_action(BaseField base, int k_max, int samples, const HarnessOptions& opts = {});

/// Steinberg cells partition B_u and carry the Spaltenstein label, for every
/// partition of n and k <= k_max.
std::vector<Report> verify_labelling(int n, BaseField base, int k_max, const HarnessOptions& opts = {});

bool all_pass(const std::vector<Report>& reports);

}  // namespace flagvar
