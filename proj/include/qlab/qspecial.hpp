#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/bivariate.hpp"
#include "qlab/qseries.hpp"

namespace qlab {

// A parameter of the form sign * z^z_exponent * q^q_exponent, or exactly 0.
class MonomialArg {
 public:
  static MonomialArg zero() { return MonomialArg(); }

  // sign * q^e
  static MonomialArg q_power(std::size_t e, int sign = 1) { return MonomialArg(sign, 0, e); }

  // sign * z * q^e
  static MonomialArg z_times(std::size_t e = 0, int sign = 1) { return MonomialArg(sign, 1, e); }

  static MonomialArg general(int sign, std::size_t z_exponent, std::size_t q_exponent) {
    return MonomialArg(sign, z_exponent, q_exponent);
  }

  bool is_zero() const noexcept { return sign_ == 0; }
  int sign() const noexcept { return sign_; }
  std::size_t z_exponent() const noexcept { return z_exp_; }
  std::size_t q_exponent() const noexcept { return q_exp_; }
  bool involves_z() const noexcept { return !is_zero() && z_exp_ > 0; }

  // The constant +1 or -1.
  bool is_constant(int s) const noexcept { return sign_ == s && z_exp_ == 0 && q_exp_ == 0; }

  // Factor 1 - a*q^k has constant term 1 unless a is the constant +-1.
  bool has_unit_factors() const noexcept { return is_zero() || z_exp_ > 0 || q_exp_ > 0; }

  MonomialArg times_q(std::size_t k) const {
    return is_zero() ? *this : MonomialArg(sign_, z_exp_, q_exp_ + k);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    if (z_exp_ == 0 && q_exp_ == 0) return s + "1";
    if (z_exp_ > 0) s += z_exp_ == 1 ? "z" : "z^" + std::to_string(z_exp_);
    if (q_exp_ > 0) s += q_exp_ == 1 ? "q" : "q^" + std::to_string(q_exp_);
    return s;
  }

  bool operator==(const MonomialArg&) const = default;

 private:
  MonomialArg() = default;
  MonomialArg(int sign, std::size_t z_exponent, std::size_t q_exponent)
      : sign_(sign), z_exp_(z_exponent), q_exp_(q_exponent) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("MonomialArg: sign must be +1 or -1");
  }

  int sign_ = 0;  // 0 encodes the zero parameter
  std::size_t z_exp_ = 0;
  std::size_t q_exp_ = 0;
};

// c / b when the quotient is again a monomial with nonnegative exponents.
inline std::optional<MonomialArg> monomial_quotient(const MonomialArg& c, const MonomialArg& b) {
  if (b.is_zero()) return std::nullopt;
  if (c.is_zero()) return MonomialArg::zero();
  if (c.z_exponent() < b.z_exponent() || c.q_exponent() < b.q_exponent()) return std::nullopt;
  return MonomialArg::general(c.sign() * b.sign(), c.z_exponent() - b.z_exponent(),
                              c.q_exponent() - b.q_exponent());
}

// Parameters of a truncated r+1 phi s sum; numerator has r+1 entries and
// denominator s entries.
struct HypergeometricSpec {
  std::vector<MonomialArg> numerator;
  std::vector<MonomialArg> denominator;
  MonomialArg argument = MonomialArg::zero();

  bool involves_z() const {
    if (argument.involves_z()) return true;
    for (const auto& a : numerator)
      if (a.involves_z()) return true;
    for (const auto& b : denominator)
      if (b.involves_z()) return true;
    return false;
  }
};

// (a; q)_n, truncated to order.
template <class Scalar = BigInt>
QSeries<Scalar> poch_finite(const MonomialArg& a, std::size_t n, std::size_t order) {
  if (a.involves_z()) throw std::invalid_argument("poch_finite: parameter involves z");
  QSeries<Scalar> acc = one<Scalar>(order);
  if (a.is_zero()) return acc;
  const Scalar c(-a.sign());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t e = a.q_exponent() + k;
    if (e >= order) break;
    acc = mul_binomial(acc, c, e);
  }
  return acc;
}

// (a; q)_inf, truncated to order. Factors 1 - a q^k with exponent >= order are
// 1 inside the window and are dropped.
template <class Scalar = BigInt>
QSeries<Scalar> poch_inf(const MonomialArg& a, std::size_t order) {
  if (a.involves_z()) throw std::invalid_argument("poch_inf: parameter involves z");
  if (a.is_constant(1)) throw std::domain_error("poch_inf: (1;q)_inf vanishes identically");
  QSeries<Scalar> acc = one<Scalar>(order);
  if (a.is_zero()) return acc;
  const Scalar c(-a.sign());
  for (std::size_t e = a.q_exponent(); e < order; ++e) acc = mul_binomial(acc, c, e);
  return acc;
}

// (a; q)_n with a possibly involving z.
template <class Scalar = BigInt>
BiSeries<Scalar> bi_poch_finite(const MonomialArg& a, std::size_t n, std::size_t zdeg,
                                std::size_t qorder) {
  BiSeries<Scalar> acc = bi_one<Scalar>(zdeg, qorder);
  if (a.is_zero() || a.z_exponent() > zdeg) return acc;
  const Scalar c(-a.sign());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t e = a.q_exponent() + k;
    if (e >= qorder) break;
    acc = bi_mul_binomial(acc, c, a.z_exponent(), e);
  }
  return acc;
}

// (a; q)_inf with a possibly involving z. Only the q-exponent grows along the
// product, so factors with q-exponent >= qorder are dropped.
template <class Scalar = BigInt>
BiSeries<Scalar> bi_poch_inf(const MonomialArg& a, std::size_t zdeg, std::size_t qorder) {
  if (a.is_constant(1)) throw std::domain_error("bi_poch_inf: (1;q)_inf vanishes identically");
  BiSeries<Scalar> acc = bi_one<Scalar>(zdeg, qorder);
  if (a.is_zero() || a.z_exponent() > zdeg) return acc;
  const Scalar c(-a.sign());
  for (std::size_t e = a.q_exponent(); e < qorder; ++e)
    acc = bi_mul_binomial(acc, c, a.z_exponent(), e);
  return acc;
}

// (z; q)_inf = prod_{k=0}^{qorder-1} (1 - z q^k) inside the window.
template <class Scalar = BigInt>
BiSeries<Scalar> poch_z_inf(std::size_t zdeg, std::size_t qorder) {
  return bi_poch_inf<Scalar>(MonomialArg::z_times(), zdeg, qorder);
}

namespace detail {

inline void validate_phi(const HypergeometricSpec& spec) {
  if (spec.numerator.empty())
    throw std::invalid_argument("phi: numerator needs at least one parameter");
  if (spec.denominator.size() + 1 < spec.numerator.size())
    throw std::invalid_argument(
        "phi: fewer denominator than numerator-minus-one parameters gives negative q-powers");
  for (const auto& b : spec.denominator) {
    if (b.is_constant(1))
      throw std::invalid_argument("phi: denominator parameter 1 makes (b;q)_n vanish");
    if (!b.has_unit_factors())
      throw std::invalid_argument("phi: denominator parameter " + b.to_string() +
                                  " has no integral inverse");
  }
}

}  // namespace detail

// Truncated r+1 phi s sum
//   sum_n prod (a_i;q)_n / ((q;q)_n prod (b_j;q)_n) * ((-1)^n q^{n(n-1)/2})^{s-r} * x^n
// on the window (zdeg, qorder). Terms are built incrementally from their
// predecessor; every update is causal, so once a term vanishes on the window
// all later terms do as well.
template <class Scalar = BigInt>
BiSeries<Scalar> phi(const HypergeometricSpec& spec, std::size_t zdeg, std::size_t qorder) {
  detail::validate_phi(spec);
  const std::size_t r = spec.numerator.size() - 1;
  const std::size_t s = spec.denominator.size();
  const std::size_t excess = s - r;
  const MonomialArg& x = spec.argument;

  bool terminates = x.is_zero() || x.z_exponent() > 0 || x.q_exponent() > 0 || excess > 0;
  for (const auto& a : spec.numerator) terminates = terminates || a.is_constant(1);
  if (!terminates) throw std::domain_error("phi: non-truncating sum");

  BiSeries<Scalar> term = bi_one<Scalar>(zdeg, qorder);
  BiSeries<Scalar> sum = term;
  if (x.is_zero()) return sum;

  const Scalar step_sign((excess % 2 == 1 ? -1 : 1) * x.sign());
  for (std::size_t n = 1;; ++n) {
    const std::size_t min_z = n * x.z_exponent();
    const std::size_t min_q = n * x.q_exponent() + excess * (n * (n - 1) / 2);
    if (min_z > zdeg || min_q >= qorder) break;

    for (const auto& a : spec.numerator) {
      if (a.is_zero() || a.z_exponent() > zdeg) continue;
      term = bi_mul_binomial(term, Scalar(-a.sign()), a.z_exponent(), a.q_exponent() + n - 1);
    }
    term = bi_div_binomial(term, Scalar(-1), 0, n);
    for (const auto& b : spec.denominator) {
      if (b.is_zero() || b.z_exponent() > zdeg) continue;
      term = bi_div_binomial(term, Scalar(-b.sign()), b.z_exponent(), b.q_exponent() + n - 1);
    }
    term = bi_shift(term, step_sign, x.z_exponent(), x.q_exponent() + excess * (n - 1));
    if (bi_is_zero(term)) break;
    sum = bi_add(sum, term);
  }
  return sum;
}

// Univariate r+1 phi s; the specification must not involve z.
template <class Scalar = BigInt>
QSeries<Scalar> phi(const HypergeometricSpec& spec, std::size_t order) {
  if (spec.involves_z()) throw std::invalid_argument("phi: specification involves z");
  return phi<Scalar>(spec, 0, order).row(0);
}

}  // namespace qlab
