#include <stdexcept>
#include "doctest.h"
#include "flagvar/harness.hpp"

using namespace flagvar;

namespace {

const Report& find(const std::vector<Report>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.claim_id == id) return r;
  throw std::runtime_error("no report " + id);
}

}  // namespace

TEST_CASE("report JSON carries every field") {
  Report r{"demo", {{"k", 1}}, 3, 3, true, 5};
  const auto j = r.to_json();
  CHECK(j["claim_id"] == "demo");
  CHECK(j["params"]["k"] == 1);
  CHECK(j["expected"] == 3);
  CHECK(j["actual"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["runtime_ms"] == 5);
  CHECK(all_pass({r}));
  r.pass = false;
  CHECK_FALSE(all_pass({r}));
}

TEST_CASE("two-by-two case, q = 2, k <= 2") {
  const auto reports = verify_theorem_a(Partition({2, 2}), {2, 1}, 2);
  CHECK(reports.size() == 6);
  for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.to_json().dump());
  // k = 2: four points in B_u cap X_2143, 35 * 4 in X_2143
  CHECK(reports[3].actual["springer_points"] == 4);
  CHECK(reports[5].actual == 140);
}

TEST_CASE("hook case and conjugate fibre grouping") {
  for (const auto& r : verify_theorem_a(Partition({2, 1}), {2, 1}, 2)) CHECK_MESSAGE(r.pass, r.to_json().dump());
  const auto b = verify_theorem_b({2, 1}, {2, 1}, 2);
  for (const auto& r : b) CHECK_MESSAGE(r.pass, r.to_json().dump());
  CHECK(b[0].actual["classes"] == 0);  // k = 1: X_213 has no GF(2)-points
  CHECK(b[1].actual["classes"] == 7);
  CHECK_THROWS_AS(verify_theorem_b({1, 2}, {2, 1}, 1), std::invalid_argument);
}

TEST_CASE("dimension checks") {
  const auto rs = verify_dimensions(5, {3, 1});
  CHECK(rs.size() == 2 * (1 + 2 + 3 + 5 + 7));
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, r.to_json().dump());
}

TEST_CASE("flag variety partition") {
  CHECK(partition_sum_check(3, {2, 1}, 2).pass);
  CHECK(partition_sum_check(3, {3, 1}, 1).pass);
  CHECK(partition_sum_check(2, {2, 2}, 1).pass);
}

TEST_CASE("worked examples at q = 2") {
  const auto rs = reproduce_examples({2, 1}, 2, 3);
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, r.to_json().dump());
  CHECK(find(rs, "two-by-two-words").actual["w(Q,Q)"] == "3,4,1,2");
}

TEST_CASE("generic relative positions") {
  const Tableau P({{1, 3}, {2, 4}}), Q({{1, 2}, {3, 4}});
  const auto same = generic_relpos_histogram(Partition({2, 2}), P, P, {2, 1}, 3);
  CHECK(same.actual["mode"] == "2,1,4,3");
  CHECK(same.pass);
  const Tableau H({{1, 2}, {3}});
  const auto hook = generic_relpos_histogram(Partition({2, 1}), H, H, {2, 1}, 3);
  CHECK(hook.actual["mode"] == "1,3,2");
  CHECK(hook.pass);
  CHECK_THROWS_AS(generic_relpos_histogram(Partition({2, 1}), P, P, {2, 1}, 2), std::invalid_argument);
}

TEST_CASE("series action and Lefschetz counts") {
  const auto rs = verify_series_action({2, 1}, 2, 30);
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, r.to_json().dump());
  CHECK(find(rs, "lefschetz-twisted").actual["swap"] == 4);
}

TEST_CASE("Steinberg labelling") {
  for (const auto& r : verify_labelling(3, {2, 1}, 2)) CHECK_MESSAGE(r.pass, r.to_json().dump());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto strip = [](std::vector<Report> rs) {
    std::vector<nlohmann::json> out;
    for (auto& r : rs) {
      r.runtime_ms = 0;
      out.push_back(r.to_json());
    }
    return out;
  };
  CHECK(strip(verify_series_action({2, 1}, 1, 10)) == strip(verify_series_action({2, 1}, 1, 10)));
  HarnessOptions other;
  other.seed = 7;
  CHECK(strip(verify_theorem_a(Partition({2, 1}), {2, 1}, 1, other)) ==
        strip(verify_theorem_a(Partition({2, 1}), {2, 1}, 1, other)));
}
