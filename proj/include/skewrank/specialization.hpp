#pragma once

// Jacobi-Trudi subscripts, jrank, the principal specialization
// s_{lambda/mu}(1^t) and quantities read off it.

#include <Eigen/Core>

#include "skewrank/numeric.hpp"
#include "skewrank/shapes.hpp"

namespace skewrank {

/// Subscripts lambda_i - mu_j - i + j of the n x n Jacobi-Trudi matrix
/// (entry k stands for h_k; h_0 = 1, h_k = 0 for k < 0). Uses the
/// normalized shape; n defaults to the number of rows of lambda and must
/// not be smaller.
Eigen::MatrixXi jt_matrix(const SkewShape& s);
Eigen::MatrixXi jt_matrix(const SkewShape& s, int n);

/// Rows of the Jacobi-Trudi matrix without an h_0 entry. Recomputed with
/// one extra row and column and checked to agree.
int jrank(const SkewShape& s);

/// h_k(1^t) = t (t+1) ... (t+k-1) / k!.
RationalPolynomial h_principal(int k);

/// det(h_{k_ij}(1^t)) by fraction-free elimination over Q[t].
RationalPolynomial principal_specialization(const SkewShape& s);

/// Multiplicity of t = 0 as a root of s(1^t); 0 for the empty shape.
int zrank(const SkewShape& s);

/// Every row of the Jacobi-Trudi matrix with a negative subscript also
/// has a zero subscript.
bool unit_row_condition(const SkewShape& s);

/// Coefficient of t^rank when unit_row_condition holds: rows with an h_0 and
/// their columns are deleted (with the Laplace sign), the rest becomes
/// 1/(a_i + b_j) and is evaluated by the Cauchy product. Cross-checked
/// against a direct determinant; throws InputError if the condition fails.
Rational cauchy_y(const SkewShape& s);

/// Semistandard fillings with entries in 1..t, column by column.
BigInt ssyt_count(const SkewShape& s, int t);

/// prod (t + j - i) / hook(i, j) for a straight shape.
RationalPolynomial hook_content_polynomial(const Partition& lambda);

}  // namespace skewrank
