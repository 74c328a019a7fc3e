#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlab/bigint.hpp"

namespace qlab {

// Formal power series in q known modulo q^order. Coefficients 0..order-1 are
// stored densely, trailing zeros included.
template <class Scalar = BigInt>
class QSeries {
 public:
  using scalar_type = Scalar;

  explicit QSeries(std::size_t order) : coeffs_(order, Scalar(0)) {
    if (order == 0) throw std::invalid_argument("QSeries: order must be at least 1");
  }

  explicit QSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries: order must be at least 1");
  }

  std::size_t order() const noexcept { return coeffs_.size(); }

  // Unchecked access; see coefficient() for the checked form.
  const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }

  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  bool operator==(const QSeries&) const = default;

 private:
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
struct Mismatch {
  std::size_t exponent;
  Scalar lhs;
  Scalar rhs;
};

template <class Scalar>
struct SeriesComparison {
  bool equal = true;
  std::optional<Mismatch<Scalar>> mismatch;

  explicit operator bool() const noexcept { return equal; }
};

template <class Scalar = BigInt>
QSeries<Scalar> zero(std::size_t order) {
  return QSeries<Scalar>(order);
}

template <class Scalar = BigInt>
QSeries<Scalar> one(std::size_t order) {
  std::vector<Scalar> c(order, Scalar(0));
  if (order > 0) c[0] = Scalar(1);
  return QSeries<Scalar>(std::move(c));
}

template <class Scalar = BigInt>
QSeries<Scalar> monomial(const Scalar& c, std::size_t e, std::size_t order) {
  if (e >= order) throw std::out_of_range("monomial: exponent lies outside the truncation window");
  std::vector<Scalar> coeffs(order, Scalar(0));
  coeffs[e] = c;
  return QSeries<Scalar>(std::move(coeffs));
}

// Polynomial with the given low-order coefficients, zero-padded (or cut) to order.
template <class Scalar = BigInt>
QSeries<Scalar> from_coefficients(std::initializer_list<Scalar> init, std::size_t order) {
  std::vector<Scalar> c(order, Scalar(0));
  std::size_t i = 0;
  for (const auto& v : init) {
    if (i >= order) break;
    c[i++] = v;
  }
  return QSeries<Scalar>(std::move(c));
}

// q^m/(1-q^m) = sum_{j>=1} q^{jm}.
template <class Scalar = BigInt>
QSeries<Scalar> geometric(std::size_t m, std::size_t order) {
  if (m == 0) throw std::invalid_argument("geometric: step must be positive");
  std::vector<Scalar> c(order, Scalar(0));
  for (std::size_t k = m; k < order; k += m) c[k] = Scalar(1);
  return QSeries<Scalar>(std::move(c));
}

template <class Scalar>
const Scalar& coefficient(const QSeries<Scalar>& a, std::size_t n) {
  if (n >= a.order()) throw std::out_of_range("coefficient: exponent beyond truncation");
  return a[n];
}

template <class Scalar>
QSeries<Scalar> truncate(const QSeries<Scalar>& a, std::size_t order) {
  if (order == 0 || order > a.order())
    throw std::invalid_argument("truncate: order must be in [1, a.order()]");
  auto c = a.coefficients();
  return QSeries<Scalar>(std::vector<Scalar>(c.begin(), c.begin() + order));
}

// Smallest exponent with a nonzero coefficient, or order() for the zero series.
template <class Scalar>
std::size_t valuation(const QSeries<Scalar>& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (a[i] != 0) return i;
  return a.order();
}

template <class Scalar>
bool is_zero(const QSeries<Scalar>& a) {
  return valuation(a) == a.order();
}

template <class Scalar>
QSeries<Scalar> add(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return QSeries<Scalar>(std::move(c));
}

template <class Scalar>
QSeries<Scalar> sub(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return QSeries<Scalar>(std::move(c));
}

template <class Scalar>
QSeries<Scalar> neg(const QSeries<Scalar>& a) {
  std::vector<Scalar> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = -a[i];
  return QSeries<Scalar>(std::move(c));
}

template <class Scalar>
QSeries<Scalar> scale(const QSeries<Scalar>& a, const Scalar& k) {
  std::vector<Scalar> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = a[i] * k;
  return QSeries<Scalar>(std::move(c));
}

// Schoolbook Cauchy product truncated to the shorter window. Leading zeros of
// either factor are skipped.
template <class Scalar>
QSeries<Scalar> mul(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> c(n, Scalar(0));
  const std::size_t va = valuation(a);
  const std::size_t vb = valuation(b);
  for (std::size_t i = va; i + vb < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = vb; i + j < n; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return QSeries<Scalar>(std::move(c));
}

// Multiplicative inverse of a series whose constant term is a unit (+1 or -1).
template <class Scalar>
QSeries<Scalar> inverse(const QSeries<Scalar>& a) {
  const Scalar& a0 = a[0];
  if (a0 != 1 && a0 != -1) throw std::domain_error("inverse: non-invertible series");
  const std::size_t n = a.order();
  std::vector<Scalar> b(n, Scalar(0));
  b[0] = a0;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i] == 0) continue;
      acc += a[i] * b[k - i];
    }
    b[k] = -(a0 * acc);
  }
  return QSeries<Scalar>(std::move(b));
}

// q^e * a, same window.
template <class Scalar>
QSeries<Scalar> shift(const QSeries<Scalar>& a, std::size_t e) {
  std::vector<Scalar> c(a.order(), Scalar(0));
  for (std::size_t i = 0; i + e < a.order(); ++i) c[i + e] = a[i];
  return QSeries<Scalar>(std::move(c));
}

// a * (1 + c q^e) in linear time.
template <class Scalar>
QSeries<Scalar> mul_binomial(const QSeries<Scalar>& a, const Scalar& c, std::size_t e) {
  const std::size_t n = a.order();
  auto src = a.coefficients();
  std::vector<Scalar> out(src.begin(), src.end());
  if (e == 0) {
    const Scalar f = Scalar(1) + c;
    for (auto& v : out) v *= f;
    return QSeries<Scalar>(std::move(out));
  }
  for (std::size_t k = e; k < n; ++k) out[k] += c * a[k - e];
  return QSeries<Scalar>(std::move(out));
}

// a / (1 + c q^e) in linear time; e >= 1 so the divisor is a unit.
template <class Scalar>
QSeries<Scalar> div_binomial(const QSeries<Scalar>& a, const Scalar& c, std::size_t e) {
  if (e == 0) throw std::domain_error("div_binomial: divisor must have unit constant term 1");
  const std::size_t n = a.order();
  auto src = a.coefficients();
  std::vector<Scalar> out(src.begin(), src.end());
  for (std::size_t k = e; k < n; ++k) out[k] -= c * out[k - e];
  return QSeries<Scalar>(std::move(out));
}

// Compares the first `order` coefficients and reports the lowest disagreement.
template <class Scalar>
SeriesComparison<Scalar> eq_up_to(const QSeries<Scalar>& a, const QSeries<Scalar>& b,
                                  std::size_t order) {
  if (order == 0 || order > a.order() || order > b.order())
    throw std::invalid_argument("eq_up_to: order exceeds an operand's truncation");
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] != b[i]) return {false, Mismatch<Scalar>{i, a[i], b[i]}};
  }
  return {true, std::nullopt};
}

template <class Scalar>
QSeries<Scalar> operator+(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  return add(a, b);
}
template <class Scalar>
QSeries<Scalar> operator-(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  return sub(a, b);
}
template <class Scalar>
QSeries<Scalar> operator-(const QSeries<Scalar>& a) {
  return neg(a);
}
template <class Scalar>
QSeries<Scalar> operator*(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
  return mul(a, b);
}
template <class Scalar>
QSeries<Scalar> operator*(const Scalar& k, const QSeries<Scalar>& a) {
  return scale(a, k);
}

}  // namespace qlab
