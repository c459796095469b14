#include "skewrank/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "skewrank/codes.hpp"
#include "skewrank/decomp.hpp"
#include "skewrank/error.hpp"
#include "skewrank/specialization.hpp"

namespace skewrank {

PowerSumPolynomial::PowerSumPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Partition(), c);
}

PowerSumPolynomial PowerSumPolynomial::monomial(const Partition& nu,
                                                const Rational& c) {
  PowerSumPolynomial p;
  if (c != 0) p.terms_.emplace(nu, c);
  return p;
}

PowerSumPolynomial PowerSumPolynomial::p_tilde(int k) {
  if (k < 1) throw InputError("p~_k needs k >= 1");
  return monomial(Partition({k}), Rational(1) / Rational(k));
}

Rational PowerSumPolynomial::coefficient(const Partition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

PowerSumPolynomial PowerSumPolynomial::homogeneous_part(int length) const {
  PowerSumPolynomial out;
  for (const auto& [nu, c] : terms_)
    if (nu.length() == length) out.terms_.emplace(nu, c);
  return out;
}

int PowerSumPolynomial::min_length() const {
  int best = -1;
  for (const auto& [nu, c] : terms_)
    if (best < 0 || nu.length() < best) best = nu.length();
  return best;
}

RationalPolynomial PowerSumPolynomial::at_all_t() const {
  RationalPolynomial out;
  for (const auto& [nu, c] : terms_)
    out += RationalPolynomial::monomial(static_cast<std::size_t>(nu.length()), c);
  return out;
}

PowerSumPolynomial& PowerSumPolynomial::operator+=(const PowerSumPolynomial& o) {
  for (const auto& [nu, c] : o.terms_) {
    Rational& slot = terms_[nu];
    slot += c;
    if (slot == 0) terms_.erase(nu);
  }
  return *this;
}

PowerSumPolynomial& PowerSumPolynomial::operator-=(const PowerSumPolynomial& o) {
  return *this += -o;
}

PowerSumPolynomial operator-(PowerSumPolynomial a) {
  for (auto& [nu, c] : a.terms_) c = -c;
  return a;
}

PowerSumPolynomial operator*(const PowerSumPolynomial& a,
                             const PowerSumPolynomial& b) {
  PowerSumPolynomial out;
  for (const auto& [nu, c] : a.terms_)
    for (const auto& [kappa, d] : b.terms_) {
      std::vector<int> parts = nu.parts();
      parts.insert(parts.end(), kappa.parts().begin(), kappa.parts().end());
      out += PowerSumPolynomial::monomial(sorted_partition(std::move(parts)),
                                          c * d);
    }
  return out;
}

std::string to_string(const PowerSumPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Partition, Rational>> terms(p.terms().begin(),
                                                    p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.length() != y.first.length())
      return x.first.length() > y.first.length();
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [nu, c] : terms) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string body;
    for (int k = nu.empty() ? 0 : nu[1]; k >= 1; --k) {
      const int m = nu.multiplicity(k);
      if (m == 0) continue;
      body = "p" + std::to_string(k) + (m > 1 ? "^" + std::to_string(m) : "") +
             (body.empty() ? "" : " " + body);
    }
    if (body.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += body;
    else
      out += to_string(magnitude) + " " + body;
  }
  return out;
}

std::vector<Partition> partitions_of(int n, int length) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (length < 0 || static_cast<int>(current.size()) == length)
        out.emplace_back(current);
      return;
    }
    if (length >= 0 && static_cast<int>(current.size()) >= length) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n);
  return out;
}

BigInt z_nu(const Partition& nu) {
  BigInt z = 1;
  for (int k = 1; k <= (nu.empty() ? 0 : nu[1]); ++k) {
    const int m = nu.multiplicity(k);
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(static_cast<unsigned>(m));
  }
  return z;
}

BigInt mn_character(const SkewShape& s, const std::vector<int>& alpha) {
  const SkewShape shape = normalize(s);
  int total = 0;
  for (int a : alpha) {
    if (a < 1) throw InputError("character type parts must be positive");
    total += a;
  }
  if (total != shape.size())
    throw InputError("character type has size " + std::to_string(total) +
                     " but the shape has " + std::to_string(shape.size()) +
                     " cells");
  // The last part is the outermost strip, so it is removed first.
  std::map<std::pair<std::vector<std::uint8_t>, std::size_t>, BigInt> memo;
  std::function<BigInt(const Code&, std::size_t)> rec =
      [&](const Code& code, std::size_t remaining) -> BigInt {
    if (remaining == 0) return code.c == code.d ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(code.c, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int p = alpha[remaining - 1];
    BigInt sum = 0;
    for (int m = 1; m + p <= code.length(); ++m) {
      if (!can_remove_strip(code, m, p)) continue;
      auto [next, removal] = remove_strip(code, m, p);
      BigInt sub = rec(next, remaining - 1);
      if (removal.height % 2)
        sum -= sub;
      else
        sum += sub;
    }
    memo.emplace(std::move(key), sum);
    return sum;
  };
  return rec(code_of(shape), alpha.size());
}

int expansion_budget() {
  if (const char* env = std::getenv("SKEWRANK_BUDGET_CELLS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      throw InputError("SKEWRANK_BUDGET_CELLS must be a nonnegative integer");
    return static_cast<int>(v);
  }
  return 14;
}

namespace {

void check_budget(const SkewShape& s) {
  const int budget = expansion_budget();
  if (s.size() > budget)
    throw InputError("shape has " + std::to_string(s.size()) +
                     " cells, over the expansion budget of " +
                     std::to_string(budget));
}

PowerSumPolynomial character_sum(const SkewShape& s,
                                 const std::vector<Partition>& types) {
  PowerSumPolynomial out;
  for (const auto& nu : types) {
    const BigInt chi = mn_character(s, nu.parts());
    if (chi != 0)
      out += PowerSumPolynomial::monomial(nu, Rational(chi) / Rational(z_nu(nu)));
  }
  return out;
}

int sign_of(int exponent) { return exponent % 2 ? -1 : 1; }

template <typename Scalar, typename Entry>
MatchingMatrix<Scalar> build_matching_matrix(const SkewShape& s, Entry entry) {
  const Code code = code_of(normalize(s));
  MatchingMatrix<Scalar> out;
  std::vector<bool> is_left;
  for (int m = 1; m <= code.length(); ++m)
    if (code.is_left(m) || code.is_right(m)) {
      out.positions.push_back(m);
      is_left.push_back(code.is_left(m));
    }
  const auto n = static_cast<Eigen::Index>(out.positions.size());
  out.a = DenseMatrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (is_left[i] && !is_left[j])
        out.a(i, j) = entry(out.positions[j] - out.positions[i]);
  return out;
}

}  // namespace

PowerSumPolynomial power_sum_expansion(const SkewShape& s) {
  check_budget(s);
  return character_sum(s, partitions_of(s.size()));
}

MatchingMatrix<PowerSumPolynomial> pfaffian_matrix(const SkewShape& s) {
  return build_matching_matrix<PowerSumPolynomial>(
      s, [](int gap) { return PowerSumPolynomial::p_tilde(gap); });
}

MatchingMatrix<Rational> pfaffian_matrix_at_one(const SkewShape& s) {
  return build_matching_matrix<Rational>(
      s, [](int gap) { return Rational(1) / Rational(gap); });
}

PowerSumPolynomial s_hat(const SkewShape& s, ShatMethod method) {
  const SkewShape shape = normalize(s);
  const Code code = code_of(shape);
  const int r = rank_from_code(code);
  switch (method) {
    case ShatMethod::Direct:
      check_budget(shape);
      return character_sum(shape, partitions_of(shape.size(), r));
    case ShatMethod::Intervals: {
      PowerSumPolynomial sum;
      for (const auto& set : interval_sets(code)) {
        PowerSumPolynomial term(sign_of(crossings(set)));
        for (const auto& [u, v] : set.pairs())
          term *= PowerSumPolynomial::p_tilde(v - u);
        sum += term;
      }
      return sign_of(z_statistic(code).total) == 1 ? sum : -sum;
    }
    case ShatMethod::Pfaffian: {
      PowerSumPolynomial pf = pfaffian(pfaffian_matrix(shape).a);
      return sign_of(z_statistic(code).total) == 1 ? pf : -pf;
    }
  }
  throw InputError("unknown s_hat method");
}

Rational y_value(const SkewShape& s, YMethod method) {
  const SkewShape shape = normalize(s);
  const Code code = code_of(shape);
  const int z = z_statistic(code).total;
  switch (method) {
    case YMethod::Intervals: {
      Rational sum = 0;
      for (const auto& set : interval_sets(code)) {
        Rational term = sign_of(crossings(set));
        for (const auto& [u, v] : set.pairs()) term /= v - u;
        sum += term;
      }
      return sign_of(z) * sum;
    }
    case YMethod::Pfaffian:
      return sign_of(z) * pfaffian(pfaffian_matrix_at_one(shape).a);
    case YMethod::LeadingCoefficient:
      return principal_specialization(shape).coefficient(
          static_cast<std::size_t>(rank_from_code(code)));
  }
  throw InputError("unknown y method");
}

DivisibilityResult divisibility_check(const SkewShape& s, const Partition& nu) {
  const SkewShape shape = normalize(s);
  const Code code = code_of(shape);
  if (nu.length() != rank_from_code(code))
    throw InputError("divisibility needs l(nu) equal to the rank");
  if (nu.size() != shape.size())
    throw InputError("divisibility needs |nu| equal to the shape size");
  DivisibilityResult out;
  out.value = mn_character(shape, nu.parts());
  out.multiplicity_factorials = 1;
  for (int k = 1; k <= nu[1]; ++k)
    out.multiplicity_factorials *=
        factorial(static_cast<unsigned>(nu.multiplicity(k)));
  BigInt q, rem;
  boost::multiprecision::divide_qr(out.value, out.multiplicity_factorials, q,
                                   rem);
  out.divides = rem == 0;
  if (out.divides) out.quotient = q;
  const int z = z_statistic(code).total;
  out.interval_sum = 0;
  for (const auto& set : interval_sets(code))
    if (set.type() == nu) out.interval_sum += sign_of(z + crossings(set));
  out.consistent = out.divides && out.quotient == out.interval_sum;
  return out;
}

ParityAudit height_parity_audit(const SkewShape& s, const IntervalSet& set) {
  const SkewShape shape = normalize(s);
  ParityAudit out;
  for (const auto& t : tableaux_of_interval_set(shape, set))
    out.heights.push_back(t.height());
  out.parity = out.heights.empty() ? 0 : out.heights.front() % 2;
  out.expected = (z_statistic(code_of(shape)).total + crossings(set)) % 2;
  out.consistent = std::all_of(out.heights.begin(), out.heights.end(),
                               [&](int h) { return h % 2 == out.parity; }) &&
                   out.parity == out.expected;
  return out;
}

}  // namespace skewrank
