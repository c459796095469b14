#pragma once

// Per-shape analysis record with its cross-module identity checks, and the
// JSON encodings shared by the command-line tool and the scanner.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewrank/characters.hpp"
#include "skewrank/codes.hpp"
#include "skewrank/decomp.hpp"
#include "skewrank/numeric.hpp"
#include "skewrank/shapes.hpp"
#include "skewrank/snakes.hpp"

namespace skewrank {

struct RankCheck {
  int diagonal = 0;  // outside minus inside diagonals
  int strips = 0;    // minimal decomposition size
  int jrank = 0;     // Jacobi-Trudi rows without h_0
  int code = 0;      // (0,1) columns of the code

  bool agree() const {
    return diagonal == strips && strips == jrank && jrank == code;
  }
};

RankCheck rank_check(const SkewShape& s);

struct DivisibilityEntry {
  Partition nu;
  DivisibilityResult result;
};

struct ShapeReport {
  SkewShape shape;  // normalized
  Code code;
  RankCheck rank;
  int zrank = 0;
  RationalPolynomial specialization;
  Rational y;
  BigInt is, mbsd, mbst;
  SnakeSequence snake_sequence;
  IntervalSet pairing;
  int z = 0;
  bool unit_rows = false;
  std::optional<Rational> cauchy;
  bool divisibility_checked = false;
  std::vector<DivisibilityEntry> divisibility;
};

struct ReportOptions {
  /// Character divisibility for every nu with l(nu) = rank; skipped above
  /// the expansion budget.
  bool divisibility = true;
  long enumeration_limit = 20000;
};

/// Throws InvariantError (with the shape in the message) when the four rank
/// characterizations differ, y differs between routes, mbsd != is^2, or a
/// Cauchy/zrank identity fails.
ShapeReport make_report(const SkewShape& s, const ReportOptions& options = {});

std::string format_report(const ShapeReport& r);

nlohmann::json to_json(const BigInt& x);
nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const IntervalSet& set);
nlohmann::json to_json(const RationalPolynomial& p);
nlohmann::json to_json(const PowerSumPolynomial& p);
nlohmann::json to_json(const BorderStrip& b);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const LatinSquare& sq);
nlohmann::json to_json(const RankCheck& r);
nlohmann::json to_json(const ShapeReport& r);

}  // namespace skewrank
