#pragma once

// Interval orders of interval sets, dropless labelings, acyclic
// orientations of the incomparability graph and its chromatic polynomial.

#include <utility>
#include <vector>

#include "skewrank/numeric.hpp"
#include "skewrank/snakes.hpp"

namespace skewrank {

/// (u_i, v_i) < (u_j, v_j) iff v_i < u_j. Elements are indexed like
/// IntervalSet::pairs().
class IntervalOrder {
 public:
  explicit IntervalOrder(const IntervalSet& set);
  explicit IntervalOrder(std::vector<std::pair<int, int>> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  const std::vector<std::pair<int, int>>& intervals() const {
    return intervals_;
  }
  bool less(int i, int j) const {
    return intervals_[i].second < intervals_[j].first;
  }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  /// phi(i) = #{j : v_j > v_i} - #{j : u_j > v_i}.
  int phi(int i) const;

 private:
  std::vector<std::pair<int, int>> intervals_;
};

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // i < j
};

Graph incomparability_graph(const IntervalOrder& p);

enum class CountMethod { Brute, Formula };

/// Element counts above which brute-force enumeration is refused.
inline constexpr int kBruteForceCap = 10;

/// Bijections f : P -> [p] with no f^{-1}(i+1) < f^{-1}(i). Formula:
/// prod (phi(i) + 1).
BigInt dropless_count(const IntervalOrder& p,
                      CountMethod method = CountMethod::Formula);

/// Formula: (-1)^r chi(-1). Brute: distinct orientations induced by all
/// vertex orderings.
BigInt acyclic_orientation_count(const IntervalOrder& p,
                                 CountMethod method = CountMethod::Formula);

/// prod (q - phi(i)) over vertices in decreasing v; each vertex's earlier
/// neighbours are checked to form a clique.
RationalPolynomial chromatic_polynomial(const IntervalOrder& p);

/// Deletion-contraction on an arbitrary simple graph.
RationalPolynomial chromatic_polynomial(const Graph& g);

}  // namespace skewrank
