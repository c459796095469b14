#include "skewrank/numeric.hpp"

namespace skewrank {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    const Rational c = p.coefficient(static_cast<std::size_t>(e));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag == 1 && e > 0;
    if (!unit) out += to_string(mag);
    if (e > 0) out += std::string(unit ? "" : " ") + (e == 1 ? "t" : "t^" + std::to_string(e));
  }
  return out;
}

}  // namespace skewrank
