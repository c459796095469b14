#include "skewrank/report.hpp"

#include <limits>
#include <sstream>

#include "skewrank/error.hpp"
#include "skewrank/specialization.hpp"

namespace skewrank {

RankCheck rank_check(const SkewShape& s) {
  const SkewShape n = normalize(s);
  RankCheck r;
  r.diagonal = diagonal_rank(n);
  r.strips = min_strip_count(n);
  r.jrank = jrank(n);
  r.code = rank_from_code(code_of(n));
  return r;
}

namespace {

std::string rank_diagnostic(const SkewShape& s, const RankCheck& r) {
  return "rank characterizations differ for " + format_shape(s) +
         ": diagonal " + std::to_string(r.diagonal) + ", strips " +
         std::to_string(r.strips) + ", jrank " + std::to_string(r.jrank) +
         ", code " + std::to_string(r.code);
}

}  // namespace

ShapeReport make_report(const SkewShape& s, const ReportOptions& options) {
  ShapeReport out;
  out.shape = normalize(s);
  const std::string name = format_shape(out.shape);
  out.code = code_of(out.shape);
  out.rank = rank_check(out.shape);
  ensure(out.rank.agree(), rank_diagnostic(out.shape, out.rank));
  const int r = out.rank.code;

  out.specialization = principal_specialization(out.shape);
  out.zrank = out.shape.empty() ? 0 : out.specialization.valuation();
  ensure(out.zrank >= r, "zrank below rank for " + name);

  const CountingReport counts =
      counting_report(out.shape, options.enumeration_limit);
  out.is = counts.is;
  out.mbsd = counts.mbsd;
  out.mbst = counts.mbst;

  out.snake_sequence = snake_sequence(out.code);
  out.pairing = canonical_pairing(out.code);
  out.z = z_statistic(out.shape).total;

  out.y = y_value(out.shape, YMethod::Intervals);
  ensure(out.y == y_value(out.shape, YMethod::Pfaffian),
         "y via the Pfaffian differs for " + name);
  ensure(out.y == out.specialization.coefficient(static_cast<std::size_t>(r)),
         "y differs from the t^rank coefficient for " + name);

  out.unit_rows = unit_row_condition(out.shape);
  if (out.unit_rows) {
    out.cauchy = cauchy_y(out.shape);
    ensure(*out.cauchy == out.y, "Cauchy coefficient differs from y for " + name);
    ensure(out.zrank == r, "zrank != rank under the row condition for " + name);
  }

  if (options.divisibility && out.shape.size() <= expansion_budget()) {
    out.divisibility_checked = true;
    for (const auto& nu : partitions_of(out.shape.size(), r))
      out.divisibility.push_back({nu, divisibility_check(out.shape, nu)});
  }
  return out;
}

std::string format_report(const ShapeReport& r) {
  std::ostringstream os;
  os << "shape        " << format_shape(r.shape) << "\n";
  os << "code         " << bits_to_string(r.code.c) << "\n";
  os << "             " << bits_to_string(r.code.d) << "\n";
  os << "rank         " << r.rank.code << " (diagonal " << r.rank.diagonal
     << ", strips " << r.rank.strips << ", jrank " << r.rank.jrank
     << ", code " << r.rank.code << ")\n";
  os << "zrank        " << r.zrank << "\n";
  os << "s(1^t)       " << to_string(r.specialization) << "\n";
  os << "y            " << to_string(r.y) << "\n";
  os << "is           " << r.is << "\n";
  os << "mbsd         " << r.mbsd << "\n";
  os << "mbst         " << r.mbst << "\n";
  os << "SS           " << to_string(r.snake_sequence) << "\n";
  os << "pairing      " << to_string(r.pairing) << "\n";
  os << "z            " << r.z << "\n";
  os << "unit rows    " << (r.unit_rows ? "true" : "false") << "\n";
  if (r.cauchy) os << "cauchy y     " << to_string(*r.cauchy) << "\n";
  if (r.divisibility_checked) {
    int failures = 0;
    for (const auto& e : r.divisibility) failures += !e.result.consistent;
    os << "divisibility " << r.divisibility.size() << " types, " << failures
       << " failures\n";
  }
  return os.str();
}

nlohmann::json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

nlohmann::json to_json(const Rational& x) { return to_string(x); }

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const IntervalSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : set.pairs()) out.push_back({u, v});
  return out;
}

nlohmann::json to_json(const RationalPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    out.push_back({i, to_json(BigInt(numerator(c))),
                   to_json(BigInt(denominator(c)))});
  }
  return out;
}

nlohmann::json to_json(const PowerSumPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back({{"partition", to_json(it->first)},
                   {"numerator", to_json(BigInt(numerator(it->second)))},
                   {"denominator", to_json(BigInt(denominator(it->second)))}});
  return out;
}

nlohmann::json to_json(const BorderStrip& b) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& sq : b.squares) out.push_back({sq.row, sq.col});
  return out;
}

nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : d.strips()) out.push_back(to_json(b));
  return out;
}

nlohmann::json to_json(const LatinSquare& sq) {
  nlohmann::json legend = nlohmann::json::array();
  for (const auto& set : sq.legend) legend.push_back(to_json(set));
  return {{"indices", sq.indices}, {"legend", legend}};
}

nlohmann::json to_json(const RankCheck& r) {
  return {{"diagonal", r.diagonal},
          {"strips", r.strips},
          {"jrank", r.jrank},
          {"code", r.code}};
}

nlohmann::json to_json(const ShapeReport& r) {
  nlohmann::json out = {
      {"shape", format_shape(r.shape)},
      {"code", {bits_to_string(r.code.c), bits_to_string(r.code.d)}},
      {"rank", r.rank.code},
      {"ranks", to_json(r.rank)},
      {"zrank", r.zrank},
      {"specialization", to_json(r.specialization)},
      {"y", to_json(r.y)},
      {"is", to_json(r.is)},
      {"mbsd", to_json(r.mbsd)},
      {"mbst", to_json(r.mbst)},
      {"snake_sequence", to_string(r.snake_sequence)},
      {"pairing", to_json(r.pairing)},
      {"z", r.z},
      {"unit_rows", r.unit_rows},
  };
  out["cauchy_y"] = r.cauchy ? to_json(*r.cauchy) : nlohmann::json(nullptr);
  if (r.divisibility_checked) {
    nlohmann::json div = nlohmann::json::array();
    for (const auto& e : r.divisibility)
      div.push_back({{"nu", to_json(e.nu)},
                     {"chi", to_json(e.result.value)},
                     {"factor", to_json(e.result.multiplicity_factorials)},
                     {"divides", e.result.divides},
                     {"interval_sum", to_json(e.result.interval_sum)},
                     {"consistent", e.result.consistent}});
    out["divisibility"] = div;
  }
  return out;
}

}  // namespace skewrank
