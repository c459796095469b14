#pragma once

// Border strip decompositions and tableaux: the link-choice bijection,
// minimal decompositions, counts, the interval-set correspondence and the
// Latin square of minimal decompositions.

#include <functional>
#include <map>
#include <vector>

#include "skewrank/codes.hpp"
#include "skewrank/numeric.hpp"
#include "skewrank/shapes.hpp"
#include "skewrank/snakes.hpp"

namespace skewrank {

struct BorderStrip {
  std::vector<Square> squares;  // init (bottom-left) to fin (top-right)
  int height = 0;               // rows spanned - 1

  int size() const { return static_cast<int>(squares.size()); }
  Square init() const { return squares.front(); }
  Square fin() const { return squares.back(); }

  friend auto operator<=>(const BorderStrip& a, const BorderStrip& b) {
    return a.squares <=> b.squares;
  }
  friend bool operator==(const BorderStrip& a, const BorderStrip& b) {
    return a.squares == b.squares;
  }
};

/// Connected, no 2x2 block, a skew diagram up to translation.
bool is_border_strip(const std::vector<Square>& cells);
/// Orders the cells from init to fin; throws InvariantError if they do not
/// form a border strip.
BorderStrip make_border_strip(std::vector<Square> cells);

class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<BorderStrip> strips,
                         std::vector<Link> links_used = {});

  const std::vector<BorderStrip>& strips() const { return strips_; }
  const std::vector<Link>& links_used() const { return links_used_; }
  int size() const { return static_cast<int>(strips_.size()); }
  Partition type() const;

  /// Identity is the strip set; links are provenance only.
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.strips_ == b.strips_;
  }
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) {
    return a.strips_ <=> b.strips_;
  }

 private:
  std::vector<BorderStrip> strips_;  // sorted
  std::vector<Link> links_used_;
};

/// Chosen link positions (1-based along the snake) for every snake, indexed
/// like snakes_of(); entries for snakes without links must be empty.
using LinkChoice = std::vector<std::vector<int>>;

/// Strips are the components of the cell graph whose edges are the chosen
/// links. Throws InputError if two chosen links of one snake are
/// consecutive.
Decomposition decomposition_from_links(const SkewShape& s,
                                       const LinkChoice& choice);
Decomposition decomposition_from_links(const std::vector<Snake>& snakes,
                                       const LinkChoice& choice);

/// Fibonacci with F_1 = F_2 = 1.
BigInt fibonacci(int n);

/// Non-consecutive subsets of {1..links}, in lexicographic order.
std::vector<std::vector<int>> nonconsecutive_subsets(int links);

/// The maximum non-consecutive link sets of a snake. A snake with 2m links
/// has m + 1 of them: option g uses positions 1, 3, ..., 2g-1 and then
/// 2g+2, ..., 2m; a snake with 2m-1 links has the single set 1, 3, ...,
/// 2m-1.
std::vector<std::vector<int>> maximal_link_sets(int links);

/// Strips in a minimal decomposition: cells minus the largest number of
/// pairwise non-consecutive links, ceil(links / 2) per snake.
int min_strip_count(const SkewShape& s);

void for_each_decomposition(const SkewShape& s,
                            const std::function<void(const Decomposition&)>& f);
std::vector<Decomposition> all_decompositions(const SkewShape& s);

void for_each_minimal_decomposition(
    const SkewShape& s, const std::function<void(const Decomposition&)>& f);
std::vector<Decomposition> minimal_decompositions(const SkewShape& s);

struct CountingReport {
  BigInt total;  // all decompositions, prod F_{a_i + 1}
  BigInt mbsd;   // minimal decompositions, is^2
  BigInt mbst;   // minimal tableaux, r! is
  BigInt is;
  std::map<Partition, BigInt> by_type;  // sigma -> is_sigma * is
};

/// Closed forms, cross-checked against the even-snake product and, when
/// there are at most `enumeration_limit` minimal decompositions, against
/// direct enumeration.
CountingReport counting_report(const SkewShape& s,
                               long enumeration_limit = 20000);

struct Tableau {
  std::vector<StripRemoval> removals;  // removal order (outermost first)
  Decomposition decomposition;

  int height() const;
  /// Strip sizes in tableau order mu = lambda^0 ⊂ ... ⊂ lambda^r.
  std::vector<int> type() const;
};

/// One tableau per ordering of the pairs of `set`, orderings in
/// lexicographic order of pair indices.
std::vector<Tableau> tableaux_of_interval_set(const SkewShape& s,
                                              const IntervalSet& set);

/// Interval set corresponding to a minimal decomposition, read from a valid
/// removal order of its strips; the result is checked against a second
/// removal order.
IntervalSet interval_set_of(const SkewShape& s, const Decomposition& d);

struct LatinSquare {
  std::vector<LinkChoice> row_choices;     // right-snake link sets
  std::vector<LinkChoice> column_choices;  // left-snake link sets
  std::vector<std::vector<Decomposition>> decompositions;
  std::vector<std::vector<int>> indices;  // 1-based into `legend`
  std::vector<IntervalSet> legend;        // interval_sets() order
};

/// Rows fix the maximal link sets of the right snakes, columns those of the
/// left snakes; odd snakes use their forced links. Throws InvariantError if
/// the index matrix is not Latin.
LatinSquare latin_square(const SkewShape& s);

}  // namespace skewrank
