#pragma once

// Randomized algebraic-law suites shared by the unit and acceptance binaries.
// Each suite returns the number of failing instances out of `trials`.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qlab/bivariate.hpp"
#include "qlab/identities.hpp"
#include "qlab/qseries.hpp"
#include "qlab/qspecial.hpp"

namespace props {

using qlab::BigInt;
using qlab::BiSeries;
using qlab::MonomialArg;
using qlab::QSeries;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline QSeries<> random_series(Rng& rng, std::size_t order) {
  std::vector<BigInt> c(order);
  for (auto& v : c) v = uniform(rng, -6, 6);
  return QSeries<>(std::move(c));
}

inline QSeries<> random_unit_series(Rng& rng, std::size_t order) {
  std::vector<BigInt> c(order);
  for (auto& v : c) v = uniform(rng, -6, 6);
  c[0] = uniform(rng, 0, 1) ? 1 : -1;
  return QSeries<>(std::move(c));
}

inline BiSeries<> random_bi(Rng& rng, std::size_t zdeg, std::size_t qorder) {
  std::vector<BigInt> c((zdeg + 1) * qorder);
  for (auto& v : c) v = uniform(rng, -4, 4);
  return BiSeries<>(zdeg, qorder, std::move(c));
}

inline MonomialArg random_arg(Rng& rng) {
  if (uniform(rng, 0, 5) == 0) return MonomialArg::zero();
  return MonomialArg::q_power(static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 1) ? 1 : -1);
}

inline int ring_axioms(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_series(rng, static_cast<std::size_t>(uniform(rng, 1, 12)));
    const auto b = random_series(rng, static_cast<std::size_t>(uniform(rng, 1, 12)));
    const auto c = random_series(rng, static_cast<std::size_t>(uniform(rng, 1, 12)));
    const bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
                    (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                    (a - a) == qlab::zero(a.order());
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int inverse_law(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_unit_series(rng, static_cast<std::size_t>(uniform(rng, 1, 20)));
    failures += a * qlab::inverse(a) == qlab::one(a.order()) ? 0 : 1;
  }
  return failures;
}

inline int geometric_law(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 40));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n) - 1));
    const auto factor = qlab::one(n) - qlab::monomial(BigInt(1), m, n);
    failures += qlab::geometric(m, n) * factor == qlab::monomial(BigInt(1), m, n) ? 0 : 1;
  }
  return failures;
}

inline int dz_product_rule(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto zd = static_cast<std::size_t>(uniform(rng, 0, 5));
    const auto qo = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto a = random_bi(rng, zd, qo);
    const auto b = random_bi(rng, zd, qo);
    failures += qlab::dz(a * b) == qlab::dz(a) * b + a * qlab::dz(b) ? 0 : 1;
  }
  return failures;
}

inline int substitution_homomorphism(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_bi(rng, static_cast<std::size_t>(uniform(rng, 0, 6)),
                             static_cast<std::size_t>(uniform(rng, 1, 8)));
    const auto b = random_bi(rng, static_cast<std::size_t>(uniform(rng, 0, 6)),
                             static_cast<std::size_t>(uniform(rng, 1, 8)));
    const auto lhs = qlab::substitute_z_eq_q(a * b);
    const auto rhs = qlab::substitute_z_eq_q(a) * qlab::substitute_z_eq_q(b);
    const std::size_t n = std::min(lhs.order(), rhs.order());
    failures += qlab::eq_up_to(lhs, rhs, n).equal ? 0 : 1;
  }
  return failures;
}

// (a;q)_{n+1} = (a;q)_n (1 - a q^n) and (q^{m+1};q)_inf (q;q)_m = (q;q)_inf.
inline int pochhammer_recurrences(Rng& rng, int trials) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_arg(rng);
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 8));
    const auto order = static_cast<std::size_t>(uniform(rng, 1, 20));
    // 1 - a q^n, built term by term
    QSeries<> step = qlab::one(order);
    if (!a.is_zero() && a.q_exponent() + n < order)
      step = step - qlab::monomial(BigInt(a.sign()), a.q_exponent() + n, order);
    bool ok = qlab::poch_finite(a, n + 1, order) == qlab::poch_finite(a, n, order) * step;

    const auto m = static_cast<std::size_t>(uniform(rng, 1, 10));
    const auto shift_lhs = qlab::poch_inf(MonomialArg::q_power(m + 1), order) *
                           qlab::poch_finite(MonomialArg::q_power(1), m, order);
    ok = ok && shift_lhs == qlab::poch_inf(MonomialArg::q_power(1), order);
    failures += ok ? 0 : 1;
  }
  return failures;
}

// (-1;q)_n = 2 (-q;q)_{n-1} for n >= 1, and (-1;q)_0 = 1.
inline int minus_one_bridge(Rng& rng, int trials) {
  int failures = 0;
  const auto minus_one = MonomialArg::q_power(0, -1);
  const auto minus_q = MonomialArg::q_power(1, -1);
  for (int t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 25));
    const auto order = static_cast<std::size_t>(uniform(rng, 1, 40));
    bool ok = qlab::poch_finite(minus_one, n, order) ==
              qlab::scale(qlab::poch_finite(minus_q, n - 1, order), BigInt(2));
    ok = ok && qlab::poch_finite(minus_one, 0, order) == qlab::one(order);
    failures += ok ? 0 : 1;
  }
  return failures;
}

struct Suite {
  std::string name;
  std::function<int(Rng&, int)> run;
};

inline std::vector<Suite> all_suites() {
  return {
      {"series ring axioms", ring_axioms},
      {"inverse law", inverse_law},
      {"geometric law", geometric_law},
      {"dz product rule", dz_product_rule},
      {"z=q substitution homomorphism", substitution_homomorphism},
      {"Pochhammer recurrences", pochhammer_recurrences},
      {"(-1)_n = 2(-q)_{n-1} bridge", minus_one_bridge},
  };
}

}  // namespace props
