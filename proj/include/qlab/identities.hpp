#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlab/bivariate.hpp"
#include "qlab/partitions.hpp"
#include "qlab/qseries.hpp"
#include "qlab/qspecial.hpp"

namespace qlab {

// Where two sides of an identity first disagree. z_degree is set for
// bivariate comparisons; stage names the sub-check that failed, if any.
struct Discrepancy {
  std::size_t q_exponent = 0;
  std::optional<std::size_t> z_degree;
  BigInt lhs;
  BigInt rhs;
  std::string stage;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t order_checked = 0;
  std::optional<std::size_t> zdeg_checked;
  std::optional<Discrepancy> first_mismatch;  // present iff !passed
  std::chrono::nanoseconds elapsed{0};
  std::vector<CheckReport> stages;
};

struct CheckOptions {
  std::size_t order = 200;
  std::size_t zdeg = 16;
  std::size_t qorder = 32;
  std::size_t finite_m_max = 30;
  EnumerationLimits limits;
};

// Build a report from two univariate sides compared below `order`.
CheckReport compare_series(std::string name, const QSeries<>& lhs, const QSeries<>& rhs,
                           std::size_t order);
CheckReport compare_bi_series(std::string name, const BiSeries<>& lhs, const BiSeries<>& rhs,
                              std::size_t zdeg, std::size_t qorder);

// Combine sub-checks: passes iff all do; the mismatch is the first failing
// stage's, tagged with that stage's name. order_checked is the largest stage window.
CheckReport combine_stages(std::string name, std::vector<CheckReport> stages);

// ---- generating functions -------------------------------------------------

// sum_{m>=1} q^m/(1-q^m) (-q;q)_{m-1}
QSeries<> genfun_a(std::size_t order);

// sum_n b(n) q^n from the distinct-partition oracle; needs order <= distinct cap.
QSeries<> genfun_b_oracle(std::size_t order, const EnumerationLimits& limits = {});

// sum_n a(n) q^n from the all-partition oracle; needs order <= cap.
QSeries<> genfun_a_oracle(std::size_t order, const EnumerationLimits& limits = {});

// sum over distinct partitions of sigma(pi) q^|pi|, weighted by (-1)^#(pi) when signed.
QSeries<> smallest_part_sum_oracle(std::size_t order, bool signed_weight,
                                   const EnumerationLimits& limits = {});

// sum_{m>=1} m q^m (-q^{m+1};q)_inf, or -sum_{m>=1} m q^m (q^{m+1};q)_inf when signed.
QSeries<> smallest_part_sum_series(std::size_t order, bool signed_weight);

// sum_{m>=1} m q^m / (sign*q; q)_m for sign = +1 or -1.
QSeries<> weighted_poch_sum(int sign, std::size_t order);

// (q)_inf sum m q^m/(q)_m + (-q)_inf sum m q^m/(-q)_m, i.e. twice sum b(n) q^n.
QSeries<> twice_b_from_quotients(std::size_t order);

// sum_{m>=1} q^m/(1-q^m), the divisor-count series.
QSeries<> divisor_series(std::size_t order);

// sum_{m>=1} q^m/(1-q^m) (2(-q;q)_{m-1} - 1)
QSeries<> odd_weighted_divisor_series(std::size_t order);

// 1/(z;q)_inf expanded as sum_{m=0}^{zdeg} z^m/(q;q)_m.
BiSeries<> euler_sum(std::size_t zdeg, std::size_t qorder);

// Both sides of Heine's first transformation
//   2phi1(a,b;c;q,z) = (b)_inf (az)_inf / ((c)_inf (z)_inf) * 2phi1(c/b, z; az; q, b)
// for monomial a, b, c with c/b monomial and (c)_inf invertible.
struct HeineSides {
  BiSeries<> lhs;
  BiSeries<> rhs;
};
HeineSides heine_sides(const MonomialArg& a, const MonomialArg& b, const MonomialArg& c,
                       std::size_t zdeg, std::size_t qorder);

// ---- checks, one per display of the proof -----------------------------------

CheckReport check_eq_1_1(std::size_t order, const EnumerationLimits& limits = {});
std::array<CheckReport, 2> check_sigma_sums(std::size_t order, const EnumerationLimits& limits = {});
CheckReport check_eq_2_1(std::size_t order, const EnumerationLimits& limits = {});
CheckReport check_euler_sum(std::size_t zdeg, std::size_t qorder);
CheckReport check_logderiv(std::size_t zdeg, std::size_t qorder);
CheckReport check_eq_2_2(std::size_t order, std::size_t zdeg, std::size_t qorder);
CheckReport check_heine_instance(std::size_t zdeg, std::size_t qorder);
CheckReport check_finite_identity(std::size_t m_max, std::size_t order);
CheckReport check_eq_2_3(std::size_t order, std::size_t zdeg, std::size_t qorder);
CheckReport check_theorem_1(std::size_t order, const EnumerationLimits& limits = {});

// ---- catalog and runner -----------------------------------------------------

struct CheckInfo {
  std::string name;
  std::string statement;
  std::vector<std::string> depends_on;
};

// All checks in name order; selectors in run_checks may also use "sigma_sums"
// for both smallest-part checks.
const std::vector<CheckInfo>& check_catalog();

// Throws std::invalid_argument naming the unknown selector.
std::vector<std::string> resolve_check_names(const std::vector<std::string>& selectors);

// Runs the named checks on up to `jobs` threads; reports come back name-sorted.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const CheckOptions& options, unsigned jobs = 1);

// Failing checks none of whose upstream checks fail.
std::vector<std::string> earliest_failures(const std::vector<CheckReport>& reports);

}  // namespace qlab
