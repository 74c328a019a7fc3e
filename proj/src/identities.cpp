#include "qlab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace qlab {

namespace {

using Clock = std::chrono::steady_clock;

const BigInt kOne(1);
const BigInt kMinusOne(-1);
const BigInt kTwo(2);

MonomialArg q_to(std::size_t e, int sign = 1) { return MonomialArg::q_power(e, sign); }

template <class F>
CheckReport timed(F&& body) {
  const auto start = Clock::now();
  CheckReport r = body();
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

// Cap on n for which the all-partition / distinct-partition oracles can run,
// expressed as a truncation order.
std::size_t oracle_order(std::size_t order, int cap) {
  return std::min(order, static_cast<std::size_t>(std::max(cap, 0)) + 1);
}

// (-1;q)_n q^n for n = 0..order-1, i.e. the coefficient series of the n-sum.
std::vector<QSeries<>> minus_one_poch_times_qn(std::size_t count, std::size_t order) {
  std::vector<QSeries<>> out;
  out.reserve(count);
  QSeries<> poch = one(order);  // (-1;q)_n
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(shift(poch, n));
    poch = mul_binomial(poch, kOne, n);  // times (1 + q^n)
  }
  return out;
}

}  // namespace

CheckReport compare_series(std::string name, const QSeries<>& lhs, const QSeries<>& rhs,
                           std::size_t order) {
  CheckReport r;
  r.name = std::move(name);
  r.order_checked = order;
  auto cmp = eq_up_to(lhs, rhs, order);
  r.passed = cmp.equal;
  if (cmp.mismatch) {
    r.first_mismatch = Discrepancy{cmp.mismatch->exponent, std::nullopt, cmp.mismatch->lhs,
                                   cmp.mismatch->rhs, ""};
  }
  return r;
}

CheckReport compare_bi_series(std::string name, const BiSeries<>& lhs, const BiSeries<>& rhs,
                              std::size_t zdeg, std::size_t qorder) {
  CheckReport r;
  r.name = std::move(name);
  r.order_checked = qorder;
  r.zdeg_checked = zdeg;
  if (auto m = bi_first_mismatch(lhs, rhs, zdeg, qorder)) {
    r.passed = false;
    r.first_mismatch = Discrepancy{m->q_exponent, m->z_degree, m->lhs, m->rhs, ""};
  }
  return r;
}

CheckReport combine_stages(std::string name, std::vector<CheckReport> stages) {
  CheckReport r;
  r.name = std::move(name);
  for (const auto& s : stages) {
    r.order_checked = std::max(r.order_checked, s.order_checked);
    if (s.zdeg_checked)
      r.zdeg_checked = std::max(r.zdeg_checked.value_or(0), *s.zdeg_checked);
    if (!s.passed && r.passed) {
      r.passed = false;
      r.first_mismatch = s.first_mismatch;
      if (r.first_mismatch) {
        r.first_mismatch->stage =
            s.first_mismatch->stage.empty() ? s.name : s.name + "/" + s.first_mismatch->stage;
      }
    }
  }
  r.stages = std::move(stages);
  return r;
}

// ---- generating functions -------------------------------------------------

QSeries<> genfun_a(std::size_t order) {
  QSeries<> acc = zero(order);
  QSeries<> poch = one(order);  // (-q;q)_{m-1}
  for (std::size_t m = 1; m < order; ++m) {
    acc = acc + div_binomial(shift(poch, m), kMinusOne, m);
    poch = mul_binomial(poch, kOne, m);
  }
  return acc;
}

QSeries<> genfun_b_oracle(std::size_t order, const EnumerationLimits& limits) {
  std::vector<BigInt> c(order, BigInt(0));
  for (std::size_t n = 1; n < order; ++n) c[n] = b_direct(static_cast<int>(n), limits);
  return QSeries<>(std::move(c));
}

QSeries<> genfun_a_oracle(std::size_t order, const EnumerationLimits& limits) {
  std::vector<BigInt> c(order, BigInt(0));
  for (std::size_t n = 1; n < order; ++n) c[n] = a_direct(static_cast<int>(n), limits);
  return QSeries<>(std::move(c));
}

QSeries<> smallest_part_sum_oracle(std::size_t order, bool signed_weight,
                                   const EnumerationLimits& limits) {
  std::vector<BigInt> c(order, BigInt(0));
  for (std::size_t n = 1; n < order; ++n) {
    std::int64_t total = 0;
    for_each_distinct_partition(
        static_cast<int>(n),
        [&](const Partition& p) {
          const int w = signed_weight && p.num_parts() % 2 == 1 ? -1 : 1;
          total += w * p.smallest();
        },
        limits);
    c[n] = total;
  }
  return QSeries<>(std::move(c));
}

QSeries<> smallest_part_sum_series(std::size_t order, bool signed_weight) {
  QSeries<> acc = zero(order);
  for (std::size_t m = 1; m < order; ++m) {
    // unsigned: (-q^{m+1};q)_inf ; signed: (q^{m+1};q)_inf
    QSeries<> tail = poch_inf(q_to(m + 1, signed_weight ? 1 : -1), order);
    acc = acc + monomial(BigInt(m), m, order) * tail;
  }
  return signed_weight ? neg(acc) : acc;
}

QSeries<> weighted_poch_sum(int sign, std::size_t order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("weighted_poch_sum: sign must be +-1");
  QSeries<> acc = zero(order);
  QSeries<> inv = one(order);  // 1/(sign q;q)_m
  for (std::size_t m = 1; m < order; ++m) {
    inv = div_binomial(inv, BigInt(-sign), m);
    acc = acc + scale(shift(inv, m), BigInt(m));
  }
  return acc;
}

QSeries<> twice_b_from_quotients(std::size_t order) {
  return poch_inf(q_to(1), order) * weighted_poch_sum(1, order) +
         poch_inf(q_to(1, -1), order) * weighted_poch_sum(-1, order);
}

QSeries<> divisor_series(std::size_t order) {
  QSeries<> acc = zero(order);
  for (std::size_t m = 1; m < order; ++m) acc = acc + geometric(m, order);
  return acc;
}

QSeries<> odd_weighted_divisor_series(std::size_t order) {
  QSeries<> acc = zero(order);
  QSeries<> poch = one(order);  // (-q;q)_{m-1}
  const QSeries<> unit = one(order);
  for (std::size_t m = 1; m < order; ++m) {
    acc = acc + geometric(m, order) * (scale(poch, kTwo) - unit);
    poch = mul_binomial(poch, kOne, m);
  }
  return acc;
}

BiSeries<> euler_sum(std::size_t zdeg, std::size_t qorder) {
  detail::BiTable<BigInt> t(zdeg, qorder);
  for (std::size_t m = 0; m <= zdeg; ++m) {
    const QSeries<> row = inverse(poch_finite(q_to(1), m, qorder));
    for (std::size_t k = 0; k < qorder; ++k) t(m, k) = row[k];
  }
  return std::move(t).finish();
}

HeineSides heine_sides(const MonomialArg& a, const MonomialArg& b, const MonomialArg& c,
                       std::size_t zdeg, std::size_t qorder) {
  if (a.involves_z() || b.involves_z() || c.involves_z())
    throw std::invalid_argument("heine_sides: parameters must not involve z");
  const auto c_over_b = monomial_quotient(c, b);
  if (!c_over_b) throw std::invalid_argument("heine_sides: c/b is not a monomial");
  const MonomialArg az =
      a.is_zero() ? a : MonomialArg::general(a.sign(), 1, a.q_exponent());

  const HypergeometricSpec left{{a, b}, {c}, MonomialArg::z_times()};
  const HypergeometricSpec right{{*c_over_b, MonomialArg::z_times()}, {az}, b};

  BiSeries<> prefactor = bi_mul(bi_poch_inf(b, zdeg, qorder), bi_poch_inf(az, zdeg, qorder));
  prefactor = bi_mul(prefactor, bi_inverse(bi_poch_inf(c, zdeg, qorder)));
  prefactor = bi_mul(prefactor, bi_inverse(poch_z_inf(zdeg, qorder)));
  return {phi(left, zdeg, qorder), bi_mul(prefactor, phi(right, zdeg, qorder))};
}

// ---- checks -----------------------------------------------------------------

CheckReport check_eq_1_1(std::size_t order, const EnumerationLimits& limits) {
  return timed([&] {
    const std::size_t n = oracle_order(order, limits.all_parts);
    return compare_series("eq_1_1", genfun_a(n), genfun_a_oracle(n, limits), n);
  });
}

std::array<CheckReport, 2> check_sigma_sums(std::size_t order, const EnumerationLimits& limits) {
  const std::size_t n = oracle_order(order, limits.distinct_parts);
  auto one_side = [&](bool signed_weight, const char* name) {
    return timed([&] {
      return compare_series(name, smallest_part_sum_oracle(n, signed_weight, limits),
                            smallest_part_sum_series(n, signed_weight), n);
    });
  };
  return {one_side(false, "sigma_sums_unsigned"), one_side(true, "sigma_sums_signed")};
}

CheckReport check_eq_2_1(std::size_t order, const EnumerationLimits& limits) {
  return timed([&] {
    const std::size_t n = oracle_order(order, limits.distinct_parts);
    const QSeries<> twice_b = scale(genfun_b_oracle(n, limits), kTwo);
    std::vector<CheckReport> stages;
    stages.push_back(compare_series("half_difference", twice_b,
                                    smallest_part_sum_oracle(n, false, limits) -
                                        smallest_part_sum_oracle(n, true, limits),
                                    n));
    stages.push_back(compare_series(
        "product_form", twice_b,
        smallest_part_sum_series(n, false) - smallest_part_sum_series(n, true), n));
    stages.push_back(compare_series("quotient_form", twice_b, twice_b_from_quotients(n), n));
    return combine_stages("eq_2_1", std::move(stages));
  });
}

CheckReport check_euler_sum(std::size_t zdeg, std::size_t qorder) {
  return timed([&] {
    return compare_bi_series("euler_sum", euler_sum(zdeg, qorder),
                             bi_inverse(poch_z_inf(zdeg, qorder)), zdeg, qorder);
  });
}

CheckReport check_logderiv(std::size_t zdeg, std::size_t qorder) {
  return timed([&] {
    const BiSeries<> lhs = z_dz(bi_inverse(poch_z_inf(zdeg, qorder)));
    BiSeries<> inner = bi_zero(zdeg, qorder);
    for (std::size_t m = 0; m < qorder; ++m)
      inner = inner + bi_div_binomial(bi_monomial(kOne, 0, m, zdeg, qorder), kMinusOne, 1, m);
    const BiSeries<> rhs = mul_z(bi_mul(euler_sum(zdeg, qorder), inner));
    return compare_bi_series("logderiv", lhs, rhs, zdeg, qorder);
  });
}

CheckReport check_eq_2_2(std::size_t order, std::size_t zdeg, std::size_t qorder) {
  return timed([&] {
    std::vector<CheckReport> stages;

    const QSeries<> derived = substitute_z_eq_q(z_dz(bi_inverse(poch_z_inf(zdeg, qorder))));
    const std::size_t b = derived.order();
    stages.push_back(compare_series("derivative_substitution",
                                    substitute_z_eq_q(z_dz(euler_sum(zdeg, qorder))),
                                    weighted_poch_sum(1, b), b));
    stages.push_back(compare_series("bivariate_pipeline", poch_inf(q_to(1), b) * derived,
                                    divisor_series(b), b));
    stages.back().zdeg_checked = zdeg;

    const QSeries<> rhs = divisor_series(order);
    stages.push_back(compare_series("direct_summation",
                                    poch_inf(q_to(1), order) * weighted_poch_sum(1, order), rhs,
                                    order));

    // q * sum_{m>=0} q^m / (1 - q^{m+1})
    QSeries<> middle = zero(order);
    for (std::size_t m = 0; m + 1 < order; ++m)
      middle = middle + monomial(kOne, m + 1, order) *
                            inverse(sub(one(order), monomial(kOne, m + 1, order)));
    stages.push_back(compare_series("middle_form", middle, rhs, order));
    return combine_stages("eq_2_2", std::move(stages));
  });
}

CheckReport check_heine_instance(std::size_t zdeg, std::size_t qorder) {
  return timed([&] {
    std::vector<CheckReport> stages;
    const HeineSides inst = heine_sides(MonomialArg::zero(), q_to(1), q_to(1, -1), zdeg, qorder);
    stages.push_back(compare_bi_series("instance", inst.lhs, inst.rhs, zdeg, qorder));

    // sum_m z^m / (-q;q)_m
    detail::BiTable<BigInt> direct(zdeg, qorder);
    for (std::size_t m = 0; m <= zdeg; ++m) {
      const QSeries<> row = inverse(poch_finite(q_to(1, -1), m, qorder));
      for (std::size_t k = 0; k < qorder; ++k) direct(m, k) = row[k];
    }
    stages.push_back(
        compare_bi_series("direct_lhs", std::move(direct).finish(), inst.lhs, zdeg, qorder));

    // (q)_inf/(-q)_inf * sum_n (-1)_n q^n / ((q)_n (z q^n)_inf)
    BiSeries<> expanded = bi_zero(zdeg, qorder);
    const auto weights = minus_one_poch_times_qn(qorder, qorder);
    for (std::size_t n = 0; n < qorder; ++n) {
      BiSeries<> term = bi_from_row(weights[n] * inverse(poch_finite(q_to(1), n, qorder)), 0, zdeg);
      for (std::size_t k = n; k < qorder; ++k) term = bi_div_binomial(term, kMinusOne, 1, k);
      expanded = expanded + term;
    }
    const QSeries<> ratio = poch_inf(q_to(1), qorder) * inverse(poch_inf(q_to(1, -1), qorder));
    expanded = bi_mul(bi_from_row(ratio, 0, zdeg), expanded);
    stages.push_back(compare_bi_series("expanded_rhs", expanded, inst.rhs, zdeg, qorder));

    struct Triple {
      MonomialArg a, b, c;
    };
    const Triple generic[] = {
        {q_to(1), q_to(2), q_to(3, -1)},
        {q_to(1, -1), q_to(1), q_to(2)},
        {q_to(2), q_to(1, -1), q_to(3)},
    };
    for (const auto& t : generic) {
      const HeineSides g = heine_sides(t.a, t.b, t.c, zdeg, qorder);
      stages.push_back(compare_bi_series("generic(a=" + t.a.to_string() + ";b=" +
                                             t.b.to_string() + ";c=" + t.c.to_string() + ")",
                                         g.lhs, g.rhs, zdeg, qorder));
    }
    return combine_stages("heine_instance", std::move(stages));
  });
}

CheckReport check_finite_identity(std::size_t m_max, std::size_t order) {
  return timed([&] {
    CheckReport largest_part;
    largest_part.name = "largest_part";
    largest_part.order_checked = order;
    CheckReport bridge;
    bridge.name = "bridge";
    bridge.order_checked = order;

    const QSeries<> unit = one(order);
    for (std::size_t m = 1; m <= m_max; ++m) {
      const QSeries<> dq = poch_finite(q_to(1, -1), m - 1, order);  // (-q)_{m-1}

      QSeries<> by_largest = unit;
      for (std::size_t n = 1; n < m; ++n)
        if (n < order)
          by_largest = by_largest + shift(poch_finite(q_to(1, -1), n - 1, order), n);
      if (largest_part.passed) {
        auto r = compare_series("largest_part", dq, by_largest, order);
        if (!r.passed) {
          largest_part.passed = false;
          largest_part.first_mismatch = r.first_mismatch;
          largest_part.first_mismatch->stage = "m=" + std::to_string(m);
        }
      }

      QSeries<> lhs = zero(order);
      for (std::size_t n = 0; n < m && n < order; ++n)
        lhs = lhs + shift(poch_finite(q_to(0, -1), n, order), n);
      if (bridge.passed) {
        auto r = compare_series("bridge", lhs, scale(dq, kTwo) - unit, order);
        if (!r.passed) {
          bridge.passed = false;
          bridge.first_mismatch = r.first_mismatch;
          bridge.first_mismatch->stage = "m=" + std::to_string(m);
        }
      }
    }
    std::vector<CheckReport> stages{std::move(largest_part), std::move(bridge)};
    return combine_stages("finite_identity", std::move(stages));
  });
}

CheckReport check_eq_2_3(std::size_t order, std::size_t zdeg, std::size_t qorder) {
  return timed([&] {
    std::vector<CheckReport> stages;

    const HeineSides inst = heine_sides(MonomialArg::zero(), q_to(1), q_to(1, -1), zdeg, qorder);
    const QSeries<> derived = substitute_z_eq_q(z_dz(inst.rhs));
    const std::size_t b = derived.order();
    stages.push_back(compare_series("bivariate_pipeline", poch_inf(q_to(1, -1), b) * derived,
                                    odd_weighted_divisor_series(b), b));
    stages.back().zdeg_checked = zdeg;

    const std::size_t n_ord = order;
    const QSeries<> rhs = odd_weighted_divisor_series(n_ord);
    const QSeries<> direct = poch_inf(q_to(1, -1), n_ord) * weighted_poch_sum(-1, n_ord);
    stages.push_back(compare_series("direct_summation", direct, rhs, n_ord));

    // sum_n (-1)_n q^n sum_{m>=0} q^{m+n+1}/(1-q^{m+n+1})
    const auto weights = minus_one_poch_times_qn(n_ord, n_ord);
    std::vector<QSeries<>> tail(n_ord + 1, zero(n_ord));  // tail[k] = sum_{j>=k} q^j/(1-q^j)
    for (std::size_t k = n_ord - 1; k >= 1; --k) tail[k] = tail[k + 1] + geometric(k, n_ord);
    QSeries<> double_sum = zero(n_ord);
    for (std::size_t n = 0; n + 1 < n_ord; ++n) double_sum = double_sum + weights[n] * tail[n + 1];
    stages.push_back(compare_series("double_sum", double_sum, direct, n_ord));

    // sum_m q^m/(1-q^m) sum_{n<m} (-1)_n q^n
    QSeries<> swapped = zero(n_ord);
    QSeries<> partial = zero(n_ord);
    for (std::size_t m = 1; m < n_ord; ++m) {
      partial = partial + weights[m - 1];
      swapped = swapped + geometric(m, n_ord) * partial;
    }
    stages.push_back(compare_series("interchange", double_sum, swapped, n_ord));
    stages.push_back(compare_series("finite_rewrite", swapped, rhs, n_ord));
    return combine_stages("eq_2_3", std::move(stages));
  });
}

CheckReport check_theorem_1(std::size_t order, const EnumerationLimits& limits) {
  return timed([&] {
    std::vector<CheckReport> stages;
    const QSeries<> a = genfun_a(order);
    stages.push_back(compare_series("series_assembly", scale(a, kTwo),
                                    divisor_series(order) + odd_weighted_divisor_series(order),
                                    order));
    const std::size_t n = oracle_order(order, limits.distinct_parts);
    stages.push_back(compare_series("oracle", truncate(a, n), genfun_b_oracle(n, limits), n));
    return combine_stages("theorem_1", std::move(stages));
  });
}

// ---- catalog and runner -----------------------------------------------------

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"eq_1_1", "sum a(n) q^n = sum_{m>=1} q^m/(1-q^m) (-q)_{m-1}  [vs gap-free enumeration]", {}},
      {"eq_2_1",
       "sum b(n) q^n = 1/2 ((q)_inf sum m q^m/(q)_m + (-q)_inf sum m q^m/(-q)_m)",
       {"sigma_sums_signed", "sigma_sums_unsigned"}},
      {"eq_2_2", "(q)_inf sum_{m>=1} m q^m/(q)_m = sum_{m>=1} q^m/(1-q^m)",
       {"euler_sum", "logderiv"}},
      {"eq_2_3",
       "(-q)_inf sum_{m>=1} m q^m/(-q)_m = sum_{m>=1} q^m/(1-q^m) (2(-q)_{m-1} - 1)",
       {"finite_identity", "heine_instance", "logderiv"}},
      {"euler_sum", "sum_{m>=0} z^m/(q)_m = 1/(z)_inf", {}},
      {"finite_identity",
       "(-q)_{m-1} = 1 + sum_{n=1}^{m-1} (-q)_{n-1} q^n  and  sum_{n<m} (-1)_n q^n = 2(-q)_{m-1} - 1",
       {}},
      {"heine_instance",
       "2phi1(0,q;-q;q,z) = (q)_inf/(-q)_inf 1/(z)_inf 2phi1(-1,z;0;q,q)",
       {}},
      {"logderiv", "z d/dz 1/(z)_inf = z/(z)_inf sum_{m>=0} q^m/(1-z q^m)", {"euler_sum"}},
      {"sigma_sums_signed",
       "sum_{pi distinct} (-1)^#pi sigma(pi) q^|pi| = -sum_{m>=1} m q^m (q^{m+1})_inf",
       {}},
      {"sigma_sums_unsigned",
       "sum_{pi distinct} sigma(pi) q^|pi| = sum_{m>=1} m q^m (-q^{m+1})_inf",
       {}},
      {"theorem_1", "a(n) = b(n) for all n >= 1", {"eq_1_1", "eq_2_1", "eq_2_2", "eq_2_3"}},
  };
  return catalog;
}

std::vector<std::string> resolve_check_names(const std::vector<std::string>& selectors) {
  std::set<std::string> chosen;
  for (const auto& s : selectors) {
    if (s == "all") {
      for (const auto& info : check_catalog()) chosen.insert(info.name);
      continue;
    }
    if (s == "sigma_sums") {
      chosen.insert("sigma_sums_signed");
      chosen.insert("sigma_sums_unsigned");
      continue;
    }
    const auto& cat = check_catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const CheckInfo& i) { return i.name == s; })) {
      std::string valid = "all, sigma_sums";
      for (const auto& info : cat) valid += ", " + info.name;
      throw std::invalid_argument("unknown check '" + s + "'; valid names: " + valid);
    }
    chosen.insert(s);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const CheckOptions& options, unsigned jobs) {
  const std::vector<std::string> resolved = resolve_check_names(names);
  const std::set<std::string> wanted(resolved.begin(), resolved.end());

  using Task = std::function<std::vector<CheckReport>()>;
  std::vector<Task> tasks;
  const auto& o = options;
  auto single = [&](const std::string& name, std::function<CheckReport()> f) {
    if (wanted.count(name)) tasks.push_back([f] { return std::vector<CheckReport>{f()}; });
  };
  single("eq_1_1", [o] { return check_eq_1_1(o.order, o.limits); });
  if (wanted.count("sigma_sums_signed") || wanted.count("sigma_sums_unsigned")) {
    tasks.push_back([o, wanted] {
      std::vector<CheckReport> out;
      for (auto& r : check_sigma_sums(o.order, o.limits))
        if (wanted.count(r.name)) out.push_back(std::move(r));
      return out;
    });
  }
  single("eq_2_1", [o] { return check_eq_2_1(o.order, o.limits); });
  single("euler_sum", [o] { return check_euler_sum(o.zdeg, o.qorder); });
  single("logderiv", [o] { return check_logderiv(o.zdeg, o.qorder); });
  single("eq_2_2", [o] { return check_eq_2_2(o.order, o.zdeg, o.qorder); });
  single("heine_instance", [o] { return check_heine_instance(o.zdeg, o.qorder); });
  single("finite_identity", [o] { return check_finite_identity(o.finite_m_max, o.order); });
  single("eq_2_3", [o] { return check_eq_2_3(o.order, o.zdeg, o.qorder); });
  single("theorem_1", [o] { return check_theorem_1(o.order, o.limits); });

  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<CheckReport> out;
  for (auto& batch : results)
    for (auto& r : batch) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(),
            [](const CheckReport& x, const CheckReport& y) { return x.name < y.name; });
  return out;
}

std::vector<std::string> earliest_failures(const std::vector<CheckReport>& reports) {
  std::set<std::string> failed;
  for (const auto& r : reports)
    if (!r.passed) failed.insert(r.name);

  std::map<std::string, std::vector<std::string>> deps;
  for (const auto& info : check_catalog()) deps[info.name] = info.depends_on;

  // A failure is "earliest" if no transitive upstream check also failed.
  std::function<bool(const std::string&)> upstream_failed = [&](const std::string& name) {
    for (const auto& d : deps[name])
      if (failed.count(d) || upstream_failed(d)) return true;
    return false;
  };
  std::vector<std::string> out;
  for (const auto& name : failed)
    if (!upstream_failed(name)) out.push_back(name);
  return out;
}

}  // namespace qlab
