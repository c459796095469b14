#include "doctest.h"

#include "skewrank/error.hpp"
#include "skewrank/orders.hpp"
#include "sweep.hpp"

using namespace skewrank;

namespace {

RationalPolynomial poly(std::vector<Rational> c) {
  return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("orders") {

TEST_CASE("interval orders") {
  IntervalOrder p(IntervalSet({{1, 6}, {2, 3}, {4, 5}}));
  CHECK(p.less(1, 2));
  CHECK_FALSE(p.comparable(0, 1));
  CHECK(p.phi(0) == 0);
  CHECK(p.phi(1) == 1);
  CHECK(p.phi(2) == 1);
  CHECK(incomparability_graph(p).edges.size() == 2);
  CHECK_THROWS_AS(IntervalOrder({{3, 2}}), InputError);
  CHECK_THROWS_AS(IntervalOrder({{1, 3}, {3, 4}}), InputError);
}

TEST_CASE("dropless labelings") {
  IntervalOrder antichain({{1, 8}, {2, 7}, {3, 6}, {4, 5}});
  CHECK(dropless_count(antichain, CountMethod::Brute) == 24);
  CHECK(dropless_count(antichain) == 24);
  IntervalOrder chain({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(dropless_count(chain, CountMethod::Brute) == 1);
  CHECK(dropless_count(chain) == 1);
  IntervalOrder p(IntervalSet({{1, 6}, {2, 3}, {4, 5}}));
  CHECK(dropless_count(p, CountMethod::Brute) == 4);
  CHECK(dropless_count(p) == 4);
}

TEST_CASE("acyclic orientations") {
  IntervalOrder edgeless({{1, 2}, {3, 4}, {5, 6}});
  CHECK(acyclic_orientation_count(edgeless) == 1);
  CHECK(acyclic_orientation_count(edgeless, CountMethod::Brute) == 1);
  IntervalOrder triangle({{1, 6}, {2, 5}, {3, 4}});
  CHECK(acyclic_orientation_count(triangle) == 6);
  CHECK(acyclic_orientation_count(triangle, CountMethod::Brute) == 6);
  std::vector<std::pair<int, int>> many;
  for (int i = 0; i <= kBruteForceCap; ++i) many.emplace_back(i + 1, 100 - i);
  CHECK_THROWS_AS(acyclic_orientation_count(IntervalOrder(many), CountMethod::Brute),
                  InputError);
  CHECK_THROWS_AS(dropless_count(IntervalOrder(many), CountMethod::Brute),
                  InputError);
  CHECK(dropless_count(IntervalOrder(many)) == factorial(kBruteForceCap + 1));
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_polynomial(IntervalOrder({{1, 2}})) == poly({0, 1}));
  CHECK(chromatic_polynomial(IntervalOrder({{1, 3}, {2, 4}})) == poly({0, -1, 1}));
  CHECK(chromatic_polynomial(IntervalOrder({{1, 2}, {3, 4}})) == poly({0, 0, 1}));
  IntervalOrder p(IntervalSet({{1, 6}, {2, 3}, {4, 5}}));
  CHECK(chromatic_polynomial(p) == poly({0, 1, -2, 1}));
  CHECK(chromatic_polynomial(incomparability_graph(p)) == poly({0, 1, -2, 1}));
  Graph cycle{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  CHECK(chromatic_polynomial(cycle) == poly({0, -3, 6, -4, 1}));
}

TEST_CASE("order identities over shapes") {
  for (const auto& s : sweep::shapes_up_to(9)) {
    const BigInt is = is_count(s);
    std::map<std::pair<std::vector<int>, std::vector<int>>, RationalPolynomial> by_ends;
    for (const auto& I : interval_sets(s)) {
      IntervalOrder p(I);
      const BigInt dl = dropless_count(p);
      CHECK(dl == is);
      CHECK(dropless_count(p, CountMethod::Brute) == dl);
      CHECK(acyclic_orientation_count(p) == dl);
      CHECK(acyclic_orientation_count(p, CountMethod::Brute) == dl);
      const RationalPolynomial chi = chromatic_polynomial(p);
      if (p.size() <= 8) CHECK(chromatic_polynomial(incomparability_graph(p)) == chi);
      std::vector<int> us, vs;
      for (auto [u, v] : I.pairs()) {
        us.push_back(u);
        vs.push_back(v);
      }
      std::sort(vs.begin(), vs.end());
      auto [it, fresh] = by_ends.try_emplace({us, vs}, chi);
      if (!fresh) CHECK(it->second == chi);
    }
  }
}

}
