#include <doctest.h>

#include "oracles.hpp"
#include "qlab/qspecial.hpp"

using qlab::BigInt;
using qlab::BiSeries;
using qlab::HypergeometricSpec;
using qlab::MonomialArg;
using qlab::QSeries;

namespace {

QSeries<> from_oracle(const oracle::Poly& p) {
  return QSeries<>(std::vector<BigInt>(p.begin(), p.end()));
}

const MonomialArg q = MonomialArg::q_power(1);
const MonomialArg minus_q = MonomialArg::q_power(1, -1);
const MonomialArg minus_one = MonomialArg::q_power(0, -1);
const MonomialArg z = MonomialArg::z_times();

}  // namespace

TEST_CASE("MonomialArg") {
  CHECK(MonomialArg::zero().is_zero());
  CHECK(MonomialArg::zero().to_string() == "0");
  CHECK(minus_q.to_string() == "-q");
  CHECK(MonomialArg::general(1, 1, 3).to_string() == "zq^3");
  CHECK(minus_one.is_constant(-1));
  CHECK_THROWS_AS(MonomialArg::q_power(1, 0), std::invalid_argument);
  CHECK(qlab::monomial_quotient(minus_q, q) == minus_one);
  CHECK_FALSE(qlab::monomial_quotient(q, MonomialArg::q_power(2)).has_value());
}

TEST_CASE("finite q-Pochhammer") {
  CHECK(qlab::poch_finite(minus_q, 2, 5) == qlab::from_coefficients<BigInt>({1, 1, 1, 1}, 5));
  CHECK(qlab::poch_finite(MonomialArg::q_power(3), 0, 4) == qlab::one(4));
  CHECK(qlab::poch_finite(MonomialArg::zero(), 5, 4) == qlab::one(4));
  CHECK(qlab::poch_finite(minus_one, 3, 4) == from_oracle(oracle::binomial_product({0, 1, 2}, 1, 4)));
  CHECK(qlab::poch_finite(minus_one, 3, 4) == qlab::from_coefficients<BigInt>({2, 2, 2, 2}, 4));
  CHECK(qlab::poch_finite(MonomialArg::q_power(0), 2, 4) == qlab::zero(4));
  CHECK_THROWS_AS(qlab::poch_finite(z, 2, 4), std::invalid_argument);
}

TEST_CASE("infinite q-Pochhammer") {
  const auto euler = qlab::poch_inf(q, 8);
  CHECK(euler == from_oracle(oracle::binomial_product({1, 2, 3, 4, 5, 6, 7}, -1, 8)));
  CHECK(euler == qlab::from_coefficients<BigInt>({1, -1, -1, 0, 0, 1, 0, 1}, 8));
  CHECK(qlab::poch_inf(MonomialArg::zero(), 6) == qlab::one(6));

  // (q^4;q)_inf (q;q)_3 = (q;q)_inf
  const auto lhs = qlab::poch_inf(MonomialArg::q_power(4), 12) * qlab::poch_finite(q, 3, 12);
  std::vector<std::size_t> ks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  CHECK(lhs == from_oracle(oracle::binomial_product(ks, -1, 12)));

  CHECK(qlab::poch_inf(minus_one, 6) == qlab::scale(qlab::poch_inf(minus_q, 6), BigInt(2)));
  CHECK_THROWS_AS(qlab::poch_inf(MonomialArg::q_power(0), 6), std::domain_error);
}

TEST_CASE("bivariate Pochhammer symbols") {
  // (zq^2;q)_inf: coefficient of z^1 is -sum_{k>=2} q^k
  const auto p = qlab::bi_poch_inf(MonomialArg::z_times(2), 3, 6);
  CHECK(p.row(1) == qlab::neg(qlab::geometric(1, 6) - qlab::monomial(BigInt(1), 1, 6)));
  const auto f = qlab::bi_poch_finite(z, 2, 2, 4);  // (1 - z)(1 - zq)
  CHECK(f.at(0, 0) == 1);
  CHECK(f.at(1, 0) == -1);
  CHECK(f.at(1, 1) == -1);
  CHECK(f.at(2, 1) == 1);
  CHECK(f.at(2, 0) == 0);
}

TEST_CASE("phi: basic hypergeometric sums") {
  const HypergeometricSpec heine_left{{MonomialArg::zero(), q}, {minus_q}, z};
  const BiSeries<> left = qlab::phi(heine_left, 6, 10);
  CHECK(left.row(0) == qlab::one(10));

  // sum_m z^m/(-q;q)_m, summed directly
  for (std::size_t m = 0; m <= 6; ++m)
    CHECK(left.row(m) == qlab::inverse(qlab::poch_finite(minus_q, m, 10)));

  // 2phi1(-1, z; 0; q, q) = sum_n (-1)_n (z)_n q^n / (q)_n, summed directly
  const HypergeometricSpec heine_right{{minus_one, z}, {MonomialArg::zero()}, q};
  const BiSeries<> right = qlab::phi(heine_right, 6, 10);
  BiSeries<> direct = qlab::bi_zero(6, 10);
  for (std::size_t n = 0; n < 10; ++n) {
    QSeries<> c = qlab::poch_finite(minus_one, n, 10) * qlab::inverse(qlab::poch_finite(q, n, 10));
    c = qlab::shift(c, n);
    direct = direct + qlab::bi_mul(qlab::bi_from_row(c, 0, 6), qlab::bi_poch_finite(z, n, 6, 10));
  }
  CHECK(right == direct);
}

TEST_CASE("phi: univariate form and the q^{n(n-1)/2} factor") {
  // 1phi1(0; -q; q, q) = sum_n q^{n(n-1)/2} (-1)^n q^n / ((q)_n (-q)_n)
  const HypergeometricSpec spec{{MonomialArg::zero()}, {minus_q}, q};
  const QSeries<> got = qlab::phi(spec, 15);
  QSeries<> want = qlab::zero(15);
  for (std::size_t n = 0; n * (n + 1) / 2 < 15; ++n) {
    QSeries<> t = qlab::inverse(qlab::poch_finite(q, n, 15) * qlab::poch_finite(minus_q, n, 15));
    t = qlab::shift(t, n * (n - 1) / 2 + n);
    if (n % 2 == 1) t = qlab::neg(t);
    want = want + t;
  }
  CHECK(got == want);

  // 1phi0(q; ; q, q): numerator-only sum with argument q is sum_n q^n = 1/(1-q)
  const HypergeometricSpec geometric_sum{{q}, {}, q};
  CHECK(qlab::phi(geometric_sum, 8) == qlab::inverse(qlab::from_coefficients<BigInt>({1, -1}, 8)));
}

TEST_CASE("phi: argument zero and errors") {
  const HypergeometricSpec trivial{{q, q}, {minus_q}, MonomialArg::zero()};
  CHECK(qlab::phi(trivial, 5) == qlab::one(5));

  const HypergeometricSpec divergent{{q, q}, {minus_q}, MonomialArg::q_power(0)};
  CHECK_THROWS_WITH_AS(qlab::phi(divergent, 5), "phi: non-truncating sum", std::domain_error);

  const HypergeometricSpec terminating{{MonomialArg::q_power(0), q}, {minus_q}, MonomialArg::q_power(0)};
  CHECK(qlab::phi(terminating, 5) == qlab::one(5));

  const HypergeometricSpec bad_denominator{{q, q}, {MonomialArg::q_power(0)}, q};
  CHECK_THROWS_AS(qlab::phi(bad_denominator, 5), std::invalid_argument);

  const HypergeometricSpec minus_one_denominator{{q, q}, {minus_one}, q};
  CHECK_THROWS_AS(qlab::phi(minus_one_denominator, 5), std::invalid_argument);

  const HypergeometricSpec laurent{{q, q, q}, {}, q};
  CHECK_THROWS_AS(qlab::phi(laurent, 5), std::invalid_argument);

  const HypergeometricSpec with_z{{q, z}, {minus_q}, q};
  CHECK_THROWS_AS(qlab::phi(with_z, 5), std::invalid_argument);
}
