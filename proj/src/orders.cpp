#include "skewrank/orders.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewrank/error.hpp"

namespace skewrank {

IntervalOrder::IntervalOrder(const IntervalSet& set)
    : IntervalOrder(set.pairs()) {}

IntervalOrder::IntervalOrder(std::vector<std::pair<int, int>> intervals)
    : intervals_(std::move(intervals)) {
  std::set<int> ends;
  for (const auto& [u, v] : intervals_) {
    if (u >= v) throw InputError("interval needs u < v");
    ends.insert(u);
    ends.insert(v);
  }
  if (ends.size() != 2 * intervals_.size())
    throw InputError("interval endpoints must be distinct");
}

int IntervalOrder::phi(int i) const {
  const int vi = intervals_[i].second;
  int count = 0;
  for (const auto& [u, v] : intervals_) {
    if (v > vi) ++count;
    if (u > vi) --count;
  }
  return count;
}

Graph incomparability_graph(const IntervalOrder& p) {
  Graph g;
  g.vertices = p.size();
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (!p.comparable(i, j)) g.edges.emplace_back(i, j);
  return g;
}

namespace {

void check_cap(int n) {
  if (n > kBruteForceCap)
    throw InputError("brute-force enumeration is capped at " +
                     std::to_string(kBruteForceCap) + " elements");
}

}  // namespace

BigInt dropless_count(const IntervalOrder& p, CountMethod method) {
  const int n = p.size();
  if (method == CountMethod::Formula) {
    BigInt product = 1;
    for (int i = 0; i < n; ++i) product *= p.phi(i) + 1;
    return product;
  }
  check_cap(n);
  // labelled[k] is the element carrying label k + 1.
  std::vector<int> labelled(static_cast<std::size_t>(n));
  std::iota(labelled.begin(), labelled.end(), 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int k = 0; ok && k + 1 < n; ++k)
      ok = !p.less(labelled[k + 1], labelled[k]);
    if (ok) ++count;
  } while (std::next_permutation(labelled.begin(), labelled.end()));
  return count;
}

BigInt acyclic_orientation_count(const IntervalOrder& p, CountMethod method) {
  if (method == CountMethod::Formula) {
    const Rational at = chromatic_polynomial(p).evaluate(Rational(-1));
    const Rational count = p.size() % 2 ? Rational(-at) : at;
    ensure(denominator(count) == 1, "acyclic orientation count not integral");
    return BigInt(numerator(count));
  }
  const int n = p.size();
  check_cap(n);
  const Graph g = incomparability_graph(p);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(static_cast<std::size_t>(n));
  std::set<std::vector<bool>> seen;
  do {
    for (int k = 0; k < n; ++k) position[order[k]] = k;
    std::vector<bool> orientation;
    orientation.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges)
      orientation.push_back(position[a] < position[b]);
    seen.insert(std::move(orientation));
  } while (std::next_permutation(order.begin(), order.end()));
  return BigInt(seen.size());
}

RationalPolynomial chromatic_polynomial(const IntervalOrder& p) {
  const int n = p.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.intervals()[a].second > p.intervals()[b].second;
  });
  RationalPolynomial chi(1);
  for (int k = 0; k < n; ++k) {
    std::vector<int> earlier;
    for (int m = 0; m < k; ++m)
      if (!p.comparable(order[m], order[k])) earlier.push_back(order[m]);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        ensure(!p.comparable(earlier[a], earlier[b]),
               "earlier neighbours do not form a clique");
    ensure(static_cast<int>(earlier.size()) == p.phi(order[k]),
           "phi disagrees with the earlier-neighbour count");
    chi *= RationalPolynomial(
        std::vector<Rational>{Rational(-p.phi(order[k])), Rational(1)});
  }
  return chi;
}

namespace {

// Adjacency as bitmasks; vertices <= 64.
RationalPolynomial chromatic_dc(std::vector<std::uint64_t> adj,
                                std::uint64_t alive) {
  for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
    if (!(alive >> a & 1)) continue;
    const std::uint64_t nbrs = adj[a] & alive;
    if (!nbrs) continue;
    const int b = __builtin_ctzll(nbrs);
    // Deletion.
    std::vector<std::uint64_t> deleted = adj;
    deleted[a] &= ~(1ULL << b);
    deleted[b] &= ~(1ULL << a);
    // Contraction of b into a.
    std::vector<std::uint64_t> contracted = deleted;
    for (int c = 0; c < static_cast<int>(adj.size()); ++c) {
      if (!(contracted[b] >> c & 1)) continue;
      contracted[a] |= 1ULL << c;
      contracted[c] |= 1ULL << a;
      contracted[c] &= ~(1ULL << b);
    }
    contracted[b] = 0;
    return chromatic_dc(deleted, alive) -
           chromatic_dc(contracted, alive & ~(1ULL << b));
  }
  return RationalPolynomial::monomial(
      static_cast<std::size_t>(__builtin_popcountll(alive)));
}

}  // namespace

RationalPolynomial chromatic_polynomial(const Graph& g) {
  if (g.vertices > 64) throw InputError("deletion-contraction needs <= 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertices), 0);
  for (const auto& [a, b] : g.edges) {
    if (a == b) throw InputError("graph has a loop");
    adj[a] |= 1ULL << b;
    adj[b] |= 1ULL << a;
  }
  const std::uint64_t alive =
      g.vertices == 64 ? ~0ULL : (1ULL << g.vertices) - 1;
  return chromatic_dc(adj, alive);
}

}  // namespace skewrank
