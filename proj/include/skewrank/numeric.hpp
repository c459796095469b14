#pragma once

// Exact scalar types and dense algorithms templated on the scalar: the
// integer/rational types, a univariate polynomial ring, fraction-free
// determinants and Pfaffians over Eigen dense matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include "skewrank/error.hpp"

namespace skewrank {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Rational& q);

// --- ring helpers used by the generic algorithms -----------------------

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

inline BigInt exact_divide(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw InvariantError("exact_divide: nonzero remainder");
  return q;
}
inline Rational exact_divide(const Rational& a, const Rational& b) {
  return a / b;
}

/// Dense univariate polynomial with coefficients indexed by power.
/// The coefficient vector is kept trimmed so the zero polynomial is empty.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Coeff(c)) {}  // NOLINT: Eigen needs Scalar(int)
  Polynomial(Coeff c) {                       // NOLINT
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(std::size_t power, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest e with t^e dividing the polynomial; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }
  Coeff coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Coeff(0);
  }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + X(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Long division; returns {quotient, remainder}. Requires a field of
  /// coefficients (or exact leading-coefficient division).
  friend std::pair<Polynomial, Polynomial> divide(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Coeff> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Coeff> quot(rem.size() - db, Coeff(0));
    const Coeff& lead = b.coeffs_.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
      if (rem[i] == 0) continue;
      Coeff q = exact_divide(rem[i], lead);
      quot[i - db] = q;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

template <typename Coeff>
bool is_zero(const Polynomial<Coeff>& p) {
  return p.is_zero();
}

template <typename Coeff>
Polynomial<Coeff> exact_divide(const Polynomial<Coeff>& a,
                               const Polynomial<Coeff>& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw InvariantError("exact_divide: polynomial remainder");
  return q;
}

/// "c0 + c1 t + ..." with rational coefficients, highest power first.
std::string to_string(const RationalPolynomial& p);

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division is exact in an integral domain, so the same routine serves
/// integers, rationals and polynomial rings.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> m = input;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_divide(num, previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Number of crossing pairs of a perfect matching given as (i, j) arcs with
/// i < j: pairs of arcs with i_h < i_k < j_h < j_k.
inline int matching_crossings(
    const std::vector<std::pair<int, int>>& arcs) {
  int c = 0;
  for (std::size_t h = 0; h < arcs.size(); ++h)
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if (arcs[h].first < arcs[k].first && arcs[k].first < arcs[h].second &&
          arcs[h].second < arcs[k].second)
        ++c;
  return c;
}

namespace detail {

template <typename Derived, typename Scalar>
void pfaffian_recurse(const Eigen::MatrixBase<Derived>& a,
                      std::vector<bool>& used,
                      std::vector<std::pair<int, int>>& arcs,
                      const Scalar& product, Scalar& total) {
  const int n = static_cast<int>(a.rows());
  int first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    if (matching_crossings(arcs) % 2 == 0)
      total = total + product;
    else
      total = total - product;
    return;
  }
  used[first] = true;
  for (int j = first + 1; j < n; ++j) {
    if (used[j] || is_zero(a(first, j))) continue;
    used[j] = true;
    arcs.emplace_back(first, j);
    pfaffian_recurse(a, used, arcs, Scalar(product * a(first, j)), total);
    arcs.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace detail

/// Pfaffian of the strictly upper triangle of `a`, summed over perfect
/// matchings with the crossing-number sign. Entries below the diagonal are
/// never read. Size 0 gives 1.
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols())
    throw std::invalid_argument("pfaffian of a non-square matrix");
  if (a.rows() % 2 != 0)
    throw std::invalid_argument("pfaffian of an odd-sized matrix");
  std::vector<bool> used(static_cast<std::size_t>(a.rows()), false);
  std::vector<std::pair<int, int>> arcs;
  Scalar total(0);
  detail::pfaffian_recurse(a, used, arcs, Scalar(1), total);
  return total;
}

}  // namespace skewrank

namespace Eigen {

template <typename Coeff>
struct NumTraits<skewrank::Polynomial<Coeff>>
    : GenericNumTraits<skewrank::Polynomial<Coeff>> {
  using Real = skewrank::Polynomial<Coeff>;
  using NonInteger = skewrank::Polynomial<Coeff>;
  using Nested = skewrank::Polynomial<Coeff>;
  using Literal = skewrank::Polynomial<Coeff>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

#include <boost/multiprecision/eigen.hpp>
