#pragma once

// Skew characters by the Murnaghan-Nakayama rule, the power-sum expansion
// of s_{lambda/mu}, its lowest-degree part by three routes, y(lambda/mu)
// and the divisibility and height-parity checks.

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "skewrank/numeric.hpp"
#include "skewrank/shapes.hpp"
#include "skewrank/snakes.hpp"

namespace skewrank {

/// Finite sum of c_nu p_nu with exact rational coefficients. The empty
/// partition is the constant term.
class PowerSumPolynomial {
 public:
  PowerSumPolynomial() = default;
  PowerSumPolynomial(int c) : PowerSumPolynomial(Rational(c)) {}  // NOLINT
  PowerSumPolynomial(const Rational& c);                          // NOLINT
  static PowerSumPolynomial monomial(const Partition& nu,
                                     const Rational& c = Rational(1));
  /// p~_k = p_k / k.
  static PowerSumPolynomial p_tilde(int k);

  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& nu) const;
  /// Terms with exactly `length` parts.
  PowerSumPolynomial homogeneous_part(int length) const;
  /// Smallest number of parts among the terms; -1 for zero.
  int min_length() const;
  /// Substitutes p_i -> t for every i.
  RationalPolynomial at_all_t() const;

  PowerSumPolynomial& operator+=(const PowerSumPolynomial& o);
  PowerSumPolynomial& operator-=(const PowerSumPolynomial& o);
  friend PowerSumPolynomial operator+(PowerSumPolynomial a,
                                      const PowerSumPolynomial& b) {
    return a += b;
  }
  friend PowerSumPolynomial operator-(PowerSumPolynomial a,
                                      const PowerSumPolynomial& b) {
    return a -= b;
  }
  friend PowerSumPolynomial operator-(PowerSumPolynomial a);
  friend PowerSumPolynomial operator*(const PowerSumPolynomial& a,
                                      const PowerSumPolynomial& b);
  PowerSumPolynomial& operator*=(const PowerSumPolynomial& o) {
    return *this = *this * o;
  }
  friend bool operator==(const PowerSumPolynomial&,
                         const PowerSumPolynomial&) = default;

 private:
  std::map<Partition, Rational> terms_;
};

inline bool is_zero(const PowerSumPolynomial& p) { return p.is_zero(); }

/// Terms by decreasing number of parts, then decreasing partitions:
/// "1/5 p1^2 p5 - 1/4 p1 p2 p4 + 1/12 p2^2 p3".
std::string to_string(const PowerSumPolynomial& p);

/// Partitions of n in decreasing lexicographic order, optionally only those
/// with `length` parts.
std::vector<Partition> partitions_of(int n, int length = -1);

/// z_nu = prod i^{m_i} m_i!.
BigInt z_nu(const Partition& nu);

/// chi^{lambda/mu}(alpha) = sum over border strip tableaux of type alpha of
/// (-1)^height. alpha is a composition; strips are removed by code swaps,
/// memoized on (code, remaining parts).
BigInt mn_character(const SkewShape& s, const std::vector<int>& alpha);

/// Cell budget for the full power-sum expansion: SKEWRANK_BUDGET_CELLS if
/// set, otherwise 14.
int expansion_budget();

/// sum_{nu |- N} chi(nu) / z_nu p_nu. Throws InputError above the budget.
PowerSumPolynomial power_sum_expansion(const SkewShape& s);

enum class ShatMethod { Direct, Intervals, Pfaffian };

/// Lowest-degree part of s_{lambda/mu} in the power sums.
PowerSumPolynomial s_hat(const SkewShape& s,
                         ShatMethod method = ShatMethod::Intervals);

template <typename Scalar>
struct MatchingMatrix {
  std::vector<int> positions;  // w_1 < ... < w_2r
  DenseMatrix<Scalar> a;       // strict upper triangle used
};

/// a_ij = p~_{w_j - w_i} when w_i is an L column and w_j an R column.
MatchingMatrix<PowerSumPolynomial> pfaffian_matrix(const SkewShape& s);
/// Same pattern with b_ij = 1 / (w_j - w_i).
MatchingMatrix<Rational> pfaffian_matrix_at_one(const SkewShape& s);

enum class YMethod { Intervals, Pfaffian, LeadingCoefficient };

/// Coefficient of t^rank in s_{lambda/mu}(1^t).
Rational y_value(const SkewShape& s, YMethod method = YMethod::Intervals);

struct DivisibilityResult {
  BigInt value;                    // chi(nu)
  BigInt multiplicity_factorials;  // m_1(nu)! m_2(nu)! ...
  bool divides = false;
  BigInt quotient;      // value / multiplicity_factorials when divides
  BigInt interval_sum;  // sum over interval sets of type nu of (-1)^(z+c)
  bool consistent = false;  // divides and quotient == interval_sum
};

/// Requires l(nu) = rank and |nu| = |shape|.
DivisibilityResult divisibility_check(const SkewShape& s, const Partition& nu);

struct ParityAudit {
  std::vector<int> heights;  // one per ordering of the pairs
  int parity = 0;            // of the first height
  int expected = 0;          // (z + crossings) mod 2
  bool consistent = false;
};

/// Heights of all r! tableaux of an interval set; never throws on a parity
/// mismatch, reports it.
ParityAudit height_parity_audit(const SkewShape& s, const IntervalSet& set);

}  // namespace skewrank

namespace Eigen {

template <>
struct NumTraits<skewrank::PowerSumPolynomial>
    : GenericNumTraits<skewrank::PowerSumPolynomial> {
  using Real = skewrank::PowerSumPolynomial;
  using NonInteger = skewrank::PowerSumPolynomial;
  using Nested = skewrank::PowerSumPolynomial;
  using Literal = skewrank::PowerSumPolynomial;
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
