#pragma once

// Snakes, the snake sequence, interval sets and the statistics read off
// them (crossings, the z statistic).

#include <string>
#include <utility>
#include <vector>

#include "skewrank/codes.hpp"
#include "skewrank/numeric.hpp"
#include "skewrank/shapes.hpp"

namespace skewrank {

enum class SnakeKind { Left, Right, Odd, Empty };

struct Snake {
  int index = 0;               // code column
  std::vector<Square> squares;  // entry square first
  SnakeKind kind = SnakeKind::Empty;
  int length = -1;  // squares - 1

  int link_count() const { return std::max(length, 0); }
};

/// Two consecutive squares of a snake. `position` counts links along the
/// path from the entry square, starting at 1.
struct Link {
  int snake_index = 0;
  int position = 0;
  Square first;
  Square second;
};

/// One snake per code column. Snake i is the alternating Up/Left path from
/// s(c_i) to s(d_i), starting with the move that has the larger budget; on
/// a tie left snakes start Left and right snakes start Up.
std::vector<Snake> snakes_of(const Code& code);
std::vector<Snake> snakes_of(const SkewShape& s);

std::vector<Link> links_of(const Snake& snake);

struct SnakeSymbol {
  SnakeKind kind = SnakeKind::Odd;  // Empty snakes print as O
  int subscript = 0;
};

using SnakeSequence = std::vector<SnakeSymbol>;

/// Subscripts come from the code counts and are cross-checked against the
/// geometric snake lengths.
SnakeSequence snake_sequence(const Code& code);
SnakeSequence snake_sequence(const SkewShape& s);
std::string to_string(const SnakeSequence& ss);

/// Pairs (u, v), u < v, kept sorted by u.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  /// Multiset of gaps v - u.
  Partition type() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend auto operator<=>(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

std::string to_string(const IntervalSet& set);

/// The noncrossing matching of (1,0) columns to (0,1) columns.
IntervalSet canonical_pairing(const Code& code);
IntervalSet canonical_pairing(const SkewShape& s);

/// All matchings of (1,0) columns to later (0,1) columns. Order: the last
/// (1,0) column is paired first, each with its admissible partners in
/// increasing order, nested toward the first column.
std::vector<IntervalSet> interval_sets(const Code& code);
std::vector<IntervalSet> interval_sets(const SkewShape& s);

/// Product over left snakes of (1 + length/2); checked against the same
/// product over right snakes.
BigInt is_count(const Code& code);
BigInt is_count(const SkewShape& s);

int crossings(const IntervalSet& set);

/// Whether `set` is an interval set of the code: u's are the (1,0) columns,
/// v's the (0,1) columns, u < v.
bool is_interval_set_of(const Code& code, const IntervalSet& set);

struct ZStatistic {
  int total = 0;
  std::vector<int> per_pair;  // aligned with canonical_pairing().pairs()
};

ZStatistic z_statistic(const Code& code);
ZStatistic z_statistic(const SkewShape& s);

}  // namespace skewrank
