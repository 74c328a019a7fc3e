#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qlab/qseries.hpp"

namespace qlab {

// Series in z and q: z-degree bounded by zdeg (a hard cap, exact below it),
// q known modulo q^qorder. Storage is row-major by z-degree.
template <class Scalar = BigInt>
class BiSeries {
 public:
  using scalar_type = Scalar;

  BiSeries(std::size_t zdeg, std::size_t qorder)
      : zdeg_(zdeg), qorder_(qorder), coeffs_((zdeg + 1) * qorder, Scalar(0)) {
    if (qorder == 0) throw std::invalid_argument("BiSeries: qorder must be at least 1");
  }

  BiSeries(std::size_t zdeg, std::size_t qorder, std::vector<Scalar> coeffs)
      : zdeg_(zdeg), qorder_(qorder), coeffs_(std::move(coeffs)) {
    if (qorder == 0) throw std::invalid_argument("BiSeries: qorder must be at least 1");
    if (coeffs_.size() != (zdeg + 1) * qorder)
      throw std::invalid_argument("BiSeries: table size does not match dimensions");
  }

  std::size_t zdeg() const noexcept { return zdeg_; }
  std::size_t qorder() const noexcept { return qorder_; }

  // Coefficient of z^j q^k (unchecked).
  const Scalar& operator()(std::size_t j, std::size_t k) const { return coeffs_[j * qorder_ + k]; }

  const Scalar& at(std::size_t j, std::size_t k) const {
    if (j > zdeg_ || k >= qorder_) throw std::out_of_range("BiSeries::at: index outside window");
    return (*this)(j, k);
  }

  // Coefficient of z^j as a q-series.
  QSeries<Scalar> row(std::size_t j) const {
    if (j > zdeg_) throw std::out_of_range("BiSeries::row: z-degree above bound");
    auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>(j * qorder_);
    return QSeries<Scalar>(std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(qorder_)));
  }

  const std::vector<Scalar>& table() const noexcept { return coeffs_; }

  bool operator==(const BiSeries&) const = default;

 private:
  std::size_t zdeg_;
  std::size_t qorder_;
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
struct BiMismatch {
  std::size_t z_degree;
  std::size_t q_exponent;
  Scalar lhs;
  Scalar rhs;
};

namespace detail {

// Mutable scratch table used while building a BiSeries.
template <class Scalar>
struct BiTable {
  std::size_t zdeg;
  std::size_t qorder;
  std::vector<Scalar> c;

  BiTable(std::size_t z, std::size_t q) : zdeg(z), qorder(q), c((z + 1) * q, Scalar(0)) {}
  explicit BiTable(const BiSeries<Scalar>& a)
      : zdeg(a.zdeg()), qorder(a.qorder()), c(a.table()) {}

  Scalar& operator()(std::size_t j, std::size_t k) { return c[j * qorder + k]; }
  const Scalar& operator()(std::size_t j, std::size_t k) const { return c[j * qorder + k]; }
  BiSeries<Scalar> finish() && { return BiSeries<Scalar>(zdeg, qorder, std::move(c)); }
};

}  // namespace detail

template <class Scalar = BigInt>
BiSeries<Scalar> bi_zero(std::size_t zdeg, std::size_t qorder) {
  return BiSeries<Scalar>(zdeg, qorder);
}

template <class Scalar = BigInt>
BiSeries<Scalar> bi_one(std::size_t zdeg, std::size_t qorder) {
  detail::BiTable<Scalar> t(zdeg, qorder);
  t(0, 0) = Scalar(1);
  return std::move(t).finish();
}

// c z^j q^k.
template <class Scalar = BigInt>
BiSeries<Scalar> bi_monomial(const Scalar& c, std::size_t j, std::size_t k, std::size_t zdeg,
                             std::size_t qorder) {
  if (j > zdeg || k >= qorder)
    throw std::out_of_range("bi_monomial: term lies outside the truncation window");
  detail::BiTable<Scalar> t(zdeg, qorder);
  t(j, k) = c;
  return std::move(t).finish();
}

// z^j * a(q) as a BiSeries; q-order is inherited from a.
template <class Scalar>
BiSeries<Scalar> bi_from_row(const QSeries<Scalar>& a, std::size_t j, std::size_t zdeg) {
  detail::BiTable<Scalar> t(zdeg, a.order());
  if (j <= zdeg)
    for (std::size_t k = 0; k < a.order(); ++k) t(j, k) = a[k];
  return std::move(t).finish();
}

template <class Scalar>
BiSeries<Scalar> bi_truncate(const BiSeries<Scalar>& a, std::size_t zdeg, std::size_t qorder) {
  if (zdeg > a.zdeg() || qorder == 0 || qorder > a.qorder())
    throw std::invalid_argument("bi_truncate: target window exceeds operand");
  detail::BiTable<Scalar> t(zdeg, qorder);
  for (std::size_t j = 0; j <= zdeg; ++j)
    for (std::size_t k = 0; k < qorder; ++k) t(j, k) = a(j, k);
  return std::move(t).finish();
}

template <class Scalar>
BiSeries<Scalar> bi_add(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  detail::BiTable<Scalar> t(std::min(a.zdeg(), b.zdeg()), std::min(a.qorder(), b.qorder()));
  for (std::size_t j = 0; j <= t.zdeg; ++j)
    for (std::size_t k = 0; k < t.qorder; ++k) t(j, k) = a(j, k) + b(j, k);
  return std::move(t).finish();
}

template <class Scalar>
BiSeries<Scalar> bi_sub(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  detail::BiTable<Scalar> t(std::min(a.zdeg(), b.zdeg()), std::min(a.qorder(), b.qorder()));
  for (std::size_t j = 0; j <= t.zdeg; ++j)
    for (std::size_t k = 0; k < t.qorder; ++k) t(j, k) = a(j, k) - b(j, k);
  return std::move(t).finish();
}

template <class Scalar>
BiSeries<Scalar> bi_scale(const BiSeries<Scalar>& a, const Scalar& s) {
  detail::BiTable<Scalar> t(a);
  for (auto& v : t.c) v *= s;
  return std::move(t).finish();
}

template <class Scalar>
BiSeries<Scalar> bi_mul(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  detail::BiTable<Scalar> t(std::min(a.zdeg(), b.zdeg()), std::min(a.qorder(), b.qorder()));
  for (std::size_t j1 = 0; j1 <= t.zdeg; ++j1)
    for (std::size_t k1 = 0; k1 < t.qorder; ++k1) {
      const Scalar& x = a(j1, k1);
      if (x == 0) continue;
      for (std::size_t j2 = 0; j1 + j2 <= t.zdeg; ++j2)
        for (std::size_t k2 = 0; k1 + k2 < t.qorder; ++k2) {
          const Scalar& y = b(j2, k2);
          if (y == 0) continue;
          t(j1 + j2, k1 + k2) += x * y;
        }
    }
  return std::move(t).finish();
}

// Coefficient solve in (z-degree, q-exponent) lexicographic order.
template <class Scalar>
BiSeries<Scalar> bi_inverse(const BiSeries<Scalar>& a) {
  const Scalar& a0 = a(0, 0);
  if (a0 != 1 && a0 != -1) throw std::domain_error("bi_inverse: non-invertible series");
  detail::BiTable<Scalar> t(a.zdeg(), a.qorder());
  for (std::size_t j = 0; j <= t.zdeg; ++j)
    for (std::size_t k = 0; k < t.qorder; ++k) {
      if (j == 0 && k == 0) {
        t(0, 0) = a0;
        continue;
      }
      Scalar acc(0);
      for (std::size_t j1 = 0; j1 <= j; ++j1)
        for (std::size_t k1 = 0; k1 <= k; ++k1) {
          if (j1 == 0 && k1 == 0) continue;
          const Scalar& x = a(j1, k1);
          if (x == 0) continue;
          acc += x * t(j - j1, k - k1);
        }
      t(j, k) = -(a0 * acc);
    }
  return std::move(t).finish();
}

// Formal partial derivative in z. The z-degree bound drops by one (floor 0).
template <class Scalar>
BiSeries<Scalar> dz(const BiSeries<Scalar>& a) {
  const std::size_t zd = a.zdeg() == 0 ? 0 : a.zdeg() - 1;
  detail::BiTable<Scalar> t(zd, a.qorder());
  for (std::size_t j = 0; j + 1 <= a.zdeg(); ++j)
    for (std::size_t k = 0; k < a.qorder(); ++k) t(j, k) = Scalar(j + 1) * a(j + 1, k);
  return std::move(t).finish();
}

// z * a. Exact: the z-degree bound rises by one.
template <class Scalar>
BiSeries<Scalar> mul_z(const BiSeries<Scalar>& a) {
  detail::BiTable<Scalar> t(a.zdeg() + 1, a.qorder());
  for (std::size_t j = 0; j <= a.zdeg(); ++j)
    for (std::size_t k = 0; k < a.qorder(); ++k) t(j + 1, k) = a(j, k);
  return std::move(t).finish();
}

// z * d/dz.
template <class Scalar>
BiSeries<Scalar> z_dz(const BiSeries<Scalar>& a) {
  detail::BiTable<Scalar> t(a.zdeg(), a.qorder());
  for (std::size_t j = 1; j <= a.zdeg(); ++j)
    for (std::size_t k = 0; k < a.qorder(); ++k) t(j, k) = Scalar(j) * a(j, k);
  return std::move(t).finish();
}

// Maps z^j q^k to q^{j+k}. The result is only known below min(qorder, zdeg+1):
// the first discarded z-power would land at exponent zdeg+1.
template <class Scalar>
QSeries<Scalar> substitute_z_eq_q(const BiSeries<Scalar>& a) {
  const std::size_t order = std::min(a.qorder(), a.zdeg() + 1);
  std::vector<Scalar> c(order, Scalar(0));
  for (std::size_t j = 0; j < order; ++j)
    for (std::size_t k = 0; j + k < order; ++k) c[j + k] += a(j, k);
  return QSeries<Scalar>(std::move(c));
}

// c z^j q^k * a without leaving the window.
template <class Scalar>
BiSeries<Scalar> bi_shift(const BiSeries<Scalar>& a, const Scalar& c, std::size_t j,
                          std::size_t k) {
  detail::BiTable<Scalar> t(a.zdeg(), a.qorder());
  for (std::size_t jj = 0; jj + j <= a.zdeg(); ++jj)
    for (std::size_t kk = 0; kk + k < a.qorder(); ++kk) t(jj + j, kk + k) = c * a(jj, kk);
  return std::move(t).finish();
}

// a * (1 + c z^j q^k) in time linear in the table size.
template <class Scalar>
BiSeries<Scalar> bi_mul_binomial(const BiSeries<Scalar>& a, const Scalar& c, std::size_t j,
                                 std::size_t k) {
  if (j == 0 && k == 0) return bi_scale(a, Scalar(Scalar(1) + c));
  detail::BiTable<Scalar> t(a);
  for (std::size_t jj = j; jj <= a.zdeg(); ++jj)
    for (std::size_t kk = k; kk < a.qorder(); ++kk) t(jj, kk) += c * a(jj - j, kk - k);
  return std::move(t).finish();
}

// a / (1 + c z^j q^k). For (j, k) = (0, 0) the constant 1 + c must be +-1.
template <class Scalar>
BiSeries<Scalar> bi_div_binomial(const BiSeries<Scalar>& a, const Scalar& c, std::size_t j,
                                 std::size_t k) {
  if (j == 0 && k == 0) {
    const Scalar f = Scalar(1) + c;
    if (f != 1 && f != -1) throw std::domain_error("bi_div_binomial: non-invertible divisor");
    return bi_scale(a, f);
  }
  detail::BiTable<Scalar> t(a);
  for (std::size_t jj = j; jj <= a.zdeg(); ++jj)
    for (std::size_t kk = k; kk < a.qorder(); ++kk) t(jj, kk) -= c * t(jj - j, kk - k);
  return std::move(t).finish();
}

template <class Scalar>
bool bi_is_zero(const BiSeries<Scalar>& a) {
  for (const auto& v : a.table())
    if (v != 0) return false;
  return true;
}

// Compares on the window [0, zdeg] x [0, qorder); lowest mismatch in
// (z-degree, q-exponent) lexicographic order.
template <class Scalar>
std::optional<BiMismatch<Scalar>> bi_first_mismatch(const BiSeries<Scalar>& a,
                                                    const BiSeries<Scalar>& b, std::size_t zdeg,
                                                    std::size_t qorder) {
  if (zdeg > std::min(a.zdeg(), b.zdeg()) || qorder == 0 ||
      qorder > std::min(a.qorder(), b.qorder()))
    throw std::invalid_argument("bi_first_mismatch: window exceeds an operand");
  for (std::size_t j = 0; j <= zdeg; ++j)
    for (std::size_t k = 0; k < qorder; ++k)
      if (a(j, k) != b(j, k)) return BiMismatch<Scalar>{j, k, a(j, k), b(j, k)};
  return std::nullopt;
}

template <class Scalar>
BiSeries<Scalar> operator+(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  return bi_add(a, b);
}
template <class Scalar>
BiSeries<Scalar> operator-(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  return bi_sub(a, b);
}
template <class Scalar>
BiSeries<Scalar> operator*(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
  return bi_mul(a, b);
}

}  // namespace qlab
