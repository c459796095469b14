#include "skewrank/specialization.hpp"

#include <map>
#include <vector>

#include "skewrank/error.hpp"

namespace skewrank {

Eigen::MatrixXi jt_matrix(const SkewShape& s, int n) {
  const SkewShape shape = normalize(s);
  if (n < shape.rows())
    throw InputError("Jacobi-Trudi size smaller than the number of rows");
  Eigen::MatrixXi m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(i - 1, j - 1) = shape.lambda()[i] - shape.mu()[j] - i + j;
  return m;
}

Eigen::MatrixXi jt_matrix(const SkewShape& s) {
  return jt_matrix(s, normalize(s).rows());
}

namespace {

int rows_without_zero(const Eigen::MatrixXi& m) {
  int count = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    count += (m.row(i).array() == 0).any() ? 0 : 1;
  return count;
}

}  // namespace

int jrank(const SkewShape& s) {
  const int n = normalize(s).rows();
  const int r = rows_without_zero(jt_matrix(s, n));
  ensure(r == rows_without_zero(jt_matrix(s, n + 1)),
         "jrank depends on the Jacobi-Trudi size");
  return r;
}

RationalPolynomial h_principal(int k) {
  if (k < 0) return {};
  RationalPolynomial p(1);
  for (int m = 0; m < k; ++m)
    p *= RationalPolynomial(std::vector<Rational>{Rational(m), Rational(1)});
  return p * RationalPolynomial(Rational(1, 1) / Rational(factorial(k)));
}

RationalPolynomial principal_specialization(const SkewShape& s) {
  const Eigen::MatrixXi k = jt_matrix(s);
  DenseMatrix<RationalPolynomial> m(k.rows(), k.cols());
  std::map<int, RationalPolynomial> cache;
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      auto it = cache.find(k(i, j));
      if (it == cache.end())
        it = cache.emplace(k(i, j), h_principal(k(i, j))).first;
      m(i, j) = it->second;
    }
  RationalPolynomial det = bareiss_determinant(m);
  ensure(det.degree() == s.size(), "s(1^t) does not have degree |shape|");
  return det;
}

int zrank(const SkewShape& s) {
  if (s.empty()) return 0;
  return principal_specialization(s).valuation();
}

bool unit_row_condition(const SkewShape& s) {
  const Eigen::MatrixXi m = jt_matrix(s);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if ((m.row(i).array() < 0).any() && !(m.row(i).array() == 0).any())
      return false;
  return true;
}

Rational cauchy_y(const SkewShape& s) {
  if (!unit_row_condition(s))
    throw InputError("cauchy_y needs every row with a negative subscript to "
                     "contain a zero");
  const SkewShape shape = normalize(s);
  const Eigen::MatrixXi k = jt_matrix(shape);
  const int n = static_cast<int>(k.rows());
  std::vector<int> rows, cols;
  std::vector<bool> col_deleted(static_cast<std::size_t>(n), false);
  int sign_exponent = 0;
  for (int i = 0; i < n; ++i) {
    int zero_col = -1;
    for (int j = 0; j < n; ++j)
      if (k(i, j) == 0) zero_col = j;
    if (zero_col < 0) {
      rows.push_back(i);
    } else {
      ensure(!col_deleted[zero_col], "two h_0 entries share a column");
      col_deleted[zero_col] = true;
      sign_exponent += i + zero_col;
    }
  }
  for (int j = 0; j < n; ++j)
    if (!col_deleted[j]) cols.push_back(j);
  ensure(rows.size() == cols.size(), "reduced Cauchy matrix is not square");

  // k_ij = a_i + b_j with a_i = lambda_i - i, b_j = j - mu_j.
  const std::size_t r = rows.size();
  std::vector<Rational> a(r), b(r);
  DenseMatrix<Rational> reduced(static_cast<Eigen::Index>(r),
                                static_cast<Eigen::Index>(r));
  for (std::size_t p = 0; p < r; ++p) {
    a[p] = shape.lambda()[rows[p] + 1] - (rows[p] + 1);
    b[p] = (cols[p] + 1) - shape.mu()[cols[p] + 1];
  }
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      const int entry = k(rows[p], cols[q]);
      ensure(entry > 0, "reduced Cauchy matrix has a nonpositive subscript");
      reduced(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
          Rational(1) / Rational(entry);
    }
  Rational numerator = 1, denominator = 1;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      denominator *= a[p] + b[q];
      if (p < q) numerator *= (a[p] - a[q]) * (b[p] - b[q]);
    }
  Rational value = numerator / denominator;
  ensure(value == bareiss_determinant(reduced),
         "Cauchy product disagrees with the reduced determinant");
  if (sign_exponent % 2) value = -value;
  ensure(value != 0, "Cauchy coefficient vanished");
  return value;
}

BigInt ssyt_count(const SkewShape& s, int t) {
  if (t < 0) throw InputError("ssyt_count needs t >= 0");
  const SkewShape shape = normalize(s);
  if (shape.empty()) return 1;
  const int width = shape.lambda()[1];
  // Column j holds rows top..bottom.
  std::vector<std::pair<int, int>> span(static_cast<std::size_t>(width + 1),
                                        {0, -1});
  for (const auto& c : shape.cells()) {
    auto& [top, bottom] = span[static_cast<std::size_t>(c.col)];
    if (bottom < top) top = c.row;
    top = std::min(top, c.row);
    bottom = std::max(bottom, c.row);
  }
  using Filling = std::vector<int>;  // entry per row of the column span
  std::map<Filling, BigInt> previous{{Filling{}, BigInt(1)}};
  std::pair<int, int> previous_span{0, -1};
  for (int j = 1; j <= width; ++j) {
    const auto [top, bottom] = span[static_cast<std::size_t>(j)];
    const int height = bottom - top + 1;
    std::map<Filling, BigInt> current;
    Filling f(static_cast<std::size_t>(std::max(height, 0)));
    std::function<void(int, int)> fill = [&](int pos, int low) {
      if (pos == height) {
        BigInt ways = 0;
        for (const auto& [prev, count] : previous) {
          bool ok = true;
          for (int row = std::max(top, previous_span.first);
               ok && row <= std::min(bottom, previous_span.second); ++row)
            ok = prev[static_cast<std::size_t>(row - previous_span.first)] <=
                 f[static_cast<std::size_t>(row - top)];
          if (ok) ways += count;
        }
        if (ways != 0) current[f] = ways;
        return;
      }
      for (int v = low; v <= t - (height - 1 - pos); ++v) {
        f[static_cast<std::size_t>(pos)] = v;
        fill(pos + 1, v + 1);
      }
    };
    fill(0, 1);
    previous = std::move(current);
    previous_span = {top, bottom};
  }
  BigInt total = 0;
  for (const auto& [f, count] : previous) total += count;
  return total;
}

RationalPolynomial hook_content_polynomial(const Partition& lambda) {
  RationalPolynomial p(1);
  std::vector<int> conjugate(static_cast<std::size_t>(lambda[1] + 1), 0);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) ++conjugate[static_cast<std::size_t>(j)];
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      const int hook = lambda[i] - j + conjugate[static_cast<std::size_t>(j)] - i + 1;
      p *= RationalPolynomial(
          std::vector<Rational>{Rational(j - i, hook), Rational(1, hook)});
    }
  return p;
}

}  // namespace skewrank
