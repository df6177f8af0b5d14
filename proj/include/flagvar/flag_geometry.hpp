#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagvar/combinatorics.hpp"
#include "flagvar/linalg.hpp"

namespace flagvar {

/// Complete flag 0 = V_0 < V_1 < ... < V_n = F^n.
class Flag {
 public:
  /// Flag whose V_i is spanned by the first i rows of an invertible matrix.
  static Flag from_basis(const Mat& basis);
  /// V_i = <e_1, ..., e_i>.
  static Flag standard(const Field& f, int n);

  int n() const { return static_cast<int>(chain_.size()) - 1; }
  const Field& field() const { return chain_.front().field(); }
  const Subspace& operator[](int i) const { return chain_[i]; }
  const std::vector<Subspace>& chain() const { return chain_; }
  /// Row i lies in V_{i+1} but not in V_i.
  const Mat& adapted_basis() const { return adapted_; }

  /// Entry-wise q-power map applied `times` times.
  Flag frobenius(int times = 1) const;
  /// g . F for an invertible g.
  Flag translate(const Mat& g) const;
  bool is_rational() const;

  bool operator==(const Flag& o) const { return chain_ == o.chain_; }
  std::strong_ordering operator<=>(const Flag& o) const;

 private:
  Flag(std::vector<Subspace> chain, Mat adapted) : chain_(std::move(chain)), adapted_(std::move(adapted)) {}
  friend class FlagBuilder;
  std::vector<Subspace> chain_;
  Mat adapted_;
};

Flag frobenius_flag(const Flag& f);

/// d(i, j) = dim(V_i cap V'_j) for 0 <= i, j <= n.
std::vector<std::vector<int>> intersection_dims(const Flag& a, const Flag& b);

/// The unique w with dim(V_i cap V'_j) = #({1..i} cap {w(1)..w(j)}),
/// recovered from second differences of the intersection dimensions.
Perm relative_position(const Flag& a, const Flag& b);

/// Checks the defining dimension identities for w directly.
bool in_relative_position(const std::vector<std::vector<int>>& dims, const Perm& w);

/// Precomputed data of a rational unipotent u acting on flags over the
/// same field: N = u - I and the kernels of its powers.
class UnipotentAction {
 public:
  explicit UnipotentAction(const Mat& u);

  const Mat& u() const { return u_; }
  const Mat& nilpotent() const { return nil_; }
  int n() const { return u_.rows(); }
  /// Ker N^t; equals the whole space for t beyond the nilpotency index.
  const Subspace& kernel_power(int t) const;

  bool stabilises(const Subspace& s) const;
  bool stabilises(const Flag& f) const;
  /// Steinberg's cell C(P). Requires stabilises(f).
  bool in_steinberg_cell(const Tableau& P, const Flag& f) const;
  /// Chain of Jordan shapes of N restricted to V_1, V_2, ..., V_n.
  Tableau spaltenstein_tableau(const Flag& f) const;

 private:
  Mat u_;
  Mat nil_;
  std::vector<Subspace> kernels_;
};

bool springer_membership(const Mat& u, const Flag& f);
bool dl_membership(const Perm& w, const Flag& f);
/// Throws std::invalid_argument on a shape mismatch or when f is not
/// stabilised by u.
bool steinberg_membership(const Mat& u, const Tableau& P, const Flag& f);
Tableau spaltenstein_tableau(const Mat& u, const Flag& f);

/// The partial flag (V_{c_1}, V_{c_1+c_2}, ...) of proper subspaces.
/// Throws std::domain_error when one of them is not Frobenius-stable.
std::vector<Subspace> component_index(const Flag& f, const Partition& lambda);
/// Coordinate partial flag <e_1..e_{c_1}> < <e_1..e_{c_1+c_2}> < ...
std::vector<Subspace> standard_component_index(const Field& f, const Partition& lambda);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget);
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_, budget_;
};

inline constexpr std::uint64_t kDefaultFlagBudget = 50'000'000;

/// Number of complete flags in F_Q^n, saturating at UINT64_MAX.
std::uint64_t flag_count(int n, std::uint64_t Q);
/// Number of partial flags over f with the given strictly increasing
/// subspace dimensions, by enumerating subspaces and counting chains.
std::uint64_t count_partial_flags(const Field& f, int n, const std::vector<int>& dims);

using FlagVisitor = std::function<void(const Flag&)>;
using FlagPredicate = std::function<bool(const Flag&)>;
/// Called on each partial subspace V_i (1 <= i < n); false skips every
/// flag through it.
using PrefixFilter = std::function<bool(const Subspace&)>;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultFlagBudget;
  PrefixFilter keep_prefix;
  /// Worker threads for counting; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Copy of o whose prefix filter also requires extra.
EnumerationOptions with_filter(EnumerationOptions o, const PrefixFilter& extra);

/// Visits every complete flag over f once: V_{i+1} = V_i + <v> with v
/// running over normalised vectors supported off the pivot columns of V_i,
/// in lexicographic order.
void for_each_flag(int n, const Field& f, const FlagVisitor& visit, const EnumerationOptions& opts = {});
std::vector<Flag> enumerate_flags(int n, const Field& f, const EnumerationOptions& opts = {});
/// Counts flags satisfying pred, split across threads by the choice of V_1.
std::uint64_t count_flags_if(int n, const Field& f, const FlagPredicate& pred, const EnumerationOptions& opts = {});

enum class VarietyKind { full, springer, dl, intersection, steinberg };

struct VarietySpec {
  VarietyKind kind = VarietyKind::full;
  int n = 0;
  int p = 2;
  int m = 1;
  std::optional<Mat> u;  // rational unipotent, any field with this p and m
  std::optional<Perm> w;
  std::optional<Tableau> tableau;

  static VarietySpec full(int n, int p, int m);
  static VarietySpec springer(const Mat& u);
  static VarietySpec dl(const Perm& w, int p, int m);
  static VarietySpec intersection(const Mat& u, const Perm& w);
  static VarietySpec steinberg(const Mat& u, const Tableau& P);
};

/// Membership predicate and pruning filter over GF(q^k).
struct VarietyPredicate {
  Field field;
  FlagPredicate contains;
  PrefixFilter keep_prefix;
};
VarietyPredicate make_predicate(const VarietySpec& spec, int k);

/// Number of GF(q^k)-points.
std::uint64_t count_points(const VarietySpec& spec, int k, const EnumerationOptions& opts = {});
std::vector<Flag> points(const VarietySpec& spec, int k, const EnumerationOptions& opts = {});

}  // namespace flagvar
