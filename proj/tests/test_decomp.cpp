#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "skewrank/decomp.hpp"
#include "skewrank/error.hpp"
#include "sweep.hpp"

using namespace skewrank;

namespace {

using MaskSet = std::multiset<oracle::Mask>;

MaskSet masks(const oracle::CellIndex& ix, const Decomposition& d) {
  MaskSet out;
  for (const auto& b : d.strips()) {
    oracle::Mask m = 0;
    for (auto q : b.squares) m |= oracle::Mask(1) << ix.find(q);
    out.insert(m);
  }
  return out;
}

// The (snake, position) of the link joining two squares.
std::pair<int, int> find_link(const std::vector<Snake>& snakes, Square a,
                              Square b) {
  for (std::size_t i = 0; i < snakes.size(); ++i)
    for (const auto& l : links_of(snakes[i]))
      if ((l.first == a && l.second == b) || (l.first == b && l.second == a))
        return {static_cast<int>(i), l.position};
  FAIL("no such link");
  return {-1, -1};
}

std::map<Partition, int> type_profile(const std::vector<Decomposition>& ds) {
  std::map<Partition, int> out;
  for (const auto& d : ds) ++out[d.type()];
  return out;
}

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("border strips") {
  CHECK(is_border_strip({{2, 1}, {2, 2}, {1, 2}}));
  CHECK_FALSE(is_border_strip({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK_FALSE(is_border_strip({{1, 1}, {2, 2}}));
  CHECK_FALSE(is_border_strip({{1, 1}, {1, 2}, {2, 2}}));
  BorderStrip b = make_border_strip({{1, 2}, {2, 2}, {2, 1}, {1, 3}});
  CHECK(b.init() == Square{2, 1});
  CHECK(b.fin() == Square{1, 3});
  CHECK(b.height == 1);
  CHECK_THROWS_AS(make_border_strip({{1, 1}, {2, 2}}), InvariantError);
}

TEST_CASE("decomposition from links") {
  const SkewShape sq = parse_shape("22");
  const auto snakes = snakes_of(sq);
  Decomposition singles = decomposition_from_links(sq, LinkChoice(4));
  CHECK(singles.size() == 4);

  LinkChoice choice(4);
  auto [s1, p1] = find_link(snakes, {2, 2}, {1, 2});
  auto [s2, p2] = find_link(snakes, {2, 2}, {2, 1});
  CHECK(s1 != s2);
  choice[s1].push_back(p1);
  choice[s2].push_back(p2);
  Decomposition hook = decomposition_from_links(sq, choice);
  REQUIRE(hook.size() == 2);
  std::set<std::vector<Square>> got;
  for (const auto& b : hook.strips()) got.insert(b.squares);
  CHECK(got == std::set<std::vector<Square>>{{{1, 1}},
                                             {{2, 1}, {2, 2}, {1, 2}}});

  // Consecutive links of one snake are refused.
  LinkChoice bad(4);
  for (std::size_t i = 0; i < snakes.size(); ++i)
    if (snakes[i].link_count() >= 2) {
      bad[i] = {1, 2};
      break;
    }
  CHECK_THROWS_AS(decomposition_from_links(sq, bad), InputError);

  const SkewShape small = parse_shape("332/1");
  LinkChoice minimal;
  for (const auto& sn : snakes_of(small))
    minimal.push_back(sn.link_count() ? maximal_link_sets(sn.link_count())[0]
                                      : std::vector<int>{});
  CHECK(decomposition_from_links(small, minimal).size() == 3);
}

TEST_CASE("fibonacci and link subsets") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
  for (int n = 0; n <= 8; ++n)
    CHECK(static_cast<long>(nonconsecutive_subsets(n).size()) == fibonacci(n + 2));
  CHECK(maximal_link_sets(4) ==
        std::vector<std::vector<int>>{{2, 4}, {1, 4}, {1, 3}});
  CHECK(maximal_link_sets(3) == std::vector<std::vector<int>>{{1, 3}});
}

TEST_CASE("decomposition counts") {
  CHECK(all_decompositions(parse_shape("1")).size() == 1);
  CHECK(all_decompositions(parse_shape("22")).size() == 9);
  CHECK(all_decompositions(parse_shape("2")).size() == 2);
  CHECK(minimal_decompositions(parse_shape("332/1")).size() == 16);
  CHECK(minimal_decompositions(parse_shape("22")).size() == 4);
  CHECK(minimal_decompositions(parse_shape("8874/411")).size() == 324);
}

TEST_CASE("counting report") {
  auto small = counting_report(parse_shape("332/1"));
  CHECK(small.mbsd == 16);
  CHECK(small.mbst == 24);
  CHECK(small.is == 4);
  CHECK(small.total == 81);
  CHECK(small.by_type == std::map<Partition, BigInt>{{Partition({5, 1, 1}), 4},
                                                     {Partition({4, 2, 1}), 8},
                                                     {Partition({3, 2, 2}), 4}});
  auto one = counting_report(parse_shape("1"));
  CHECK(one.total == 1);
  CHECK(one.mbsd == 1);
  CHECK(one.mbst == 1);
  auto big = counting_report(parse_shape("8874/411"));
  CHECK(big.mbsd == 324);
  CHECK(big.mbst == 432);
}

TEST_CASE("tableaux of an interval set") {
  const SkewShape s = parse_shape("332/1");
  for (const auto& I : interval_sets(s)) {
    auto ts = tableaux_of_interval_set(s, I);
    CHECK(ts.size() == 6);
    std::set<Decomposition> distinct;
    for (const auto& t : ts) distinct.insert(t.decomposition);
    CHECK(distinct.size() == 4);
  }
  auto unit = tableaux_of_interval_set(parse_shape("1"), IntervalSet({{1, 2}}));
  CHECK(unit.size() == 1);
}

TEST_CASE("interval set of a decomposition") {
  const SkewShape big = parse_shape("8874/411");
  const IntervalSet p = canonical_pairing(big);
  CHECK(interval_set_of(big, tableaux_of_interval_set(big, p)[0].decomposition) == p);

  const SkewShape s = parse_shape("332/1");
  int found = 0;
  for (const auto& d : minimal_decompositions(s))
    if (d.type() == Partition({3, 2, 2})) {
      ++found;
      CHECK(interval_set_of(s, d) == IntervalSet({{1, 3}, {2, 5}, {4, 6}}));
    }
  CHECK(found == 4);

  const SkewShape one = parse_shape("1");
  CHECK(interval_set_of(one, all_decompositions(one)[0]) == IntervalSet({{1, 2}}));
}

TEST_CASE("latin square examples") {
  auto sq = latin_square(parse_shape("332/1"));
  CHECK(sq.indices == std::vector<std::vector<int>>{
                          {1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
  CHECK(sq.legend == interval_sets(parse_shape("332/1")));
  const std::map<Partition, int> profile{{Partition({5, 1, 1}), 1},
                                         {Partition({4, 2, 1}), 2},
                                         {Partition({3, 2, 2}), 1}};
  for (const auto& row : sq.decompositions) CHECK(type_profile(row) == profile);

  auto unit = latin_square(parse_shape("1"));
  CHECK(unit.indices == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("decompositions against the ribbon oracle") {
  for (const auto& s : sweep::box(4, 4, 9)) {
    const oracle::CellIndex ix(s);
    const auto census = oracle::decompositions(s);
    const auto report = counting_report(s);
    CHECK(report.total == census.total);
    CHECK(census.min_strips == diagonal_rank(s));
    CHECK(min_strip_count(s) == census.min_strips);

    std::multiset<MaskSet> want, got;
    for (const auto& d : census.minimal)
      want.insert(MaskSet(d.begin(), d.end()));
    for (const auto& d : minimal_decompositions(s)) got.insert(masks(ix, d));
    CHECK(got == want);
    CHECK(report.mbsd == static_cast<long>(census.minimal.size()));

    long orders = 0;
    for (const auto& d : census.minimal) orders += oracle::tableau_orders(s, d);
    CHECK(report.mbst == orders);

    long all = 0;
    for_each_decomposition(s, [&](const Decomposition& d) {
      ++all;
      int links = static_cast<int>(d.links_used().size());
      CHECK(d.size() == s.size() - links);
    });
    CHECK(all == census.total);
  }
}

TEST_CASE("tableaux, interval sets and Latin squares over shapes") {
  for (const auto& s : sweep::shapes_up_to(8)) {
    const int r = diagonal_rank(s);
    const auto sets = interval_sets(s);
    std::set<std::vector<std::pair<int, int>>> tableaux;
    std::set<Decomposition> decs;
    std::map<Partition, BigInt> is_sigma;
    for (const auto& I : sets) {
      ++is_sigma[I.type()];
      for (const auto& t : tableaux_of_interval_set(s, I)) {
        std::vector<std::pair<int, int>> key;
        for (const auto& rm : t.removals) key.emplace_back(rm.start, rm.size);
        tableaux.insert(key);
        decs.insert(t.decomposition);
        CHECK(t.decomposition.size() == r);
        CHECK(interval_set_of(s, t.decomposition) == I);
      }
    }
    CHECK(static_cast<long>(tableaux.size()) ==
          factorial(r) * static_cast<long>(sets.size()));
    CHECK(static_cast<long>(decs.size()) ==
          static_cast<long>(sets.size() * sets.size()));

    auto sq = latin_square(s);
    const int n = static_cast<int>(sets.size());
    REQUIRE(static_cast<int>(sq.indices.size()) == n);
    std::map<Partition, int> profile;
    for (const auto& [type, count] : is_sigma)
      profile[type] = static_cast<int>(count);
    for (int i = 0; i < n; ++i) {
      std::set<int> row(sq.indices[i].begin(), sq.indices[i].end());
      std::set<int> col;
      std::vector<Decomposition> column;
      for (int j = 0; j < n; ++j) {
        col.insert(sq.indices[j][i]);
        column.push_back(sq.decompositions[j][i]);
      }
      CHECK(static_cast<int>(row.size()) == n);
      CHECK(static_cast<int>(col.size()) == n);
      CHECK(type_profile(sq.decompositions[i]) == profile);
      CHECK(type_profile(column) == profile);
    }
  }
}

}
