// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "property_suites.hpp"
#include "qlab/cli.hpp"
#include "qlab/identities.hpp"
#include "qlab/partitions.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using qlab::BigInt;

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> body;
};

Outcome witness_set() {
  std::set<std::string> got;
  for (const auto& p : qlab::enumerate(5))
    if (qlab::is_gap_free(p)) got.insert(p.to_string());
  const std::set<std::string> want{"5", "3+2", "2+2+1", "2+1+1+1", "1+1+1+1+1"};
  return {got == want && qlab::a_direct(5) == 5, "a(5) = " + std::to_string(got.size())};
}

Outcome theorem_desk_scale() {
  const auto a = qlab::genfun_a(500);
  for (int n = 1; n <= 50; ++n) {
    if (a[static_cast<std::size_t>(n)] != qlab::b_direct(n))
      return {false, "oracle route differs at n=" + std::to_string(n)};
  }
  const auto assembled = qlab::divisor_series(500) + qlab::odd_weighted_divisor_series(500);
  const auto cmp = qlab::eq_up_to(qlab::scale(a, BigInt(2)), assembled, 500);
  if (!cmp.equal) return {false, "series route differs at n=" + std::to_string(cmp.mismatch->exponent)};
  return {true, "oracle n<=50, series n<500, a(499) = " + a[499].str()};
}

Outcome conjugation_bijection() {
  for (int n = 1; n <= 40; ++n)
    if (!qlab::conjugation_maps_gap_free_onto_largest_repeats(n))
      return {false, "image mismatch at n=" + std::to_string(n)};
  return {true, "n = 1..40"};
}

Outcome identity_suite() {
  const qlab::CheckOptions defaults;  // order 200, zdeg 16, qorder 32, m <= 30
  if (defaults.order != 200 || defaults.zdeg != 16 || defaults.qorder != 32 || defaults.finite_m_max != 30)
    return {false, "defaults drifted"};
  const auto reports = qlab::run_checks({"all"}, defaults, 1);
  std::ostringstream detail;
  bool ok = reports.size() == 11;
  for (const auto& r : reports) {
    if (!r.passed) {
      ok = false;
      detail << r.name << " FAILED; ";
    }
    if (r.name == "eq_2_3") {
      bool interchange = false;
      for (const auto& s : r.stages) interchange = interchange || (s.name == "interchange" && s.passed);
      ok = ok && interchange;
    }
    if (r.name == "finite_identity") ok = ok && r.stages.size() == 2;
  }
  detail << reports.size() << " checks";
  return {ok, detail.str()};
}

Outcome oracle_consistency() {
  const auto a = qlab::genfun_a(31);
  const std::int64_t prefix[] = {1,  2,  3,   4,   5,   7,   8,   10,  13,  15,  18,  23,  26,  31,  39,
                                 44, 52, 63,  72,  85,  101, 115, 134, 158, 181, 208, 243, 277, 318, 369};
  for (int n = 1; n <= 30; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const std::int64_t direct = qlab::a_direct(n);
    if (direct != prefix[n - 1] || direct != oracle::gap_free_count(n) || a[idx] != direct)
      return {false, "disagreement at n=" + std::to_string(n)};
  }
  qlab::cli::RunConfig cfg;
  cfg.bfile_path = std::string(QLAB_TEST_DATA_DIR) + "/b034296_prefix.txt";
  std::ostringstream out, err;
  const int code = qlab::cli::cmd_oeis(cfg, out, err);
  return {code == qlab::cli::kExitOk, "b-file exit code " + std::to_string(code)};
}

Outcome property_suites() {
  props::Rng rng(20180301);
  constexpr int kTrials = 150;
  std::ostringstream detail;
  bool ok = true;
  for (const auto& suite : props::all_suites()) {
    const int failures = suite.run(rng, kTrials);
    if (failures) {
      ok = false;
      detail << suite.name << ": " << failures << " failures; ";
    }
  }
  detail << props::all_suites().size() << " suites x " << kTrials << " instances";
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "a(5) = 5 with the exact gap-free witness set", 0.001, witness_set},
      {2, "a(n) = b(n): oracle n <= 50, doubled series assembly n < 500", 10.0, theorem_desk_scale},
      {3, "conjugation bijection gap-free -> only-largest-repeats, n <= 40", 30.0,
       conjugation_bijection},
      {4, "identity suite at default windows", 60.0, identity_suite},
      {5, "a(n) prefix by enumeration, knapsack and series; b-file prefix", 60.0,
       oracle_consistency},
      {6, "randomized property suites", 60.0, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o{false, ""};
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.4fs, limit %gs) %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, c.time_limit_s, o.detail.c_str(),
                in_time ? "" : " [time limit exceeded]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
