#include "doctest.h"

#include "oracles.hpp"
#include "skewrank/codes.hpp"
#include "skewrank/decomp.hpp"
#include "skewrank/error.hpp"
#include "skewrank/snakes.hpp"

using namespace skewrank;

namespace {

Code code(const char* c, const char* d) {
  return {bits_from_string(c), bits_from_string(d)};
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<StripRemoval>& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& r : t) out.emplace_back(r.start, r.end);
  std::sort(out.begin(), out.end());
  return out;
}

int total_height(const std::vector<StripRemoval>& t) {
  int h = 0;
  for (const auto& r : t) h += r.height;
  return h;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("code_of") {
  CHECK(code_of(parse_shape("8874/411")) ==
        code("111101110100", "010011101111"));
  CHECK(code_of(parse_shape("1")) == code("10", "01"));
  CHECK(code_of(parse_shape("332/1")) == code("110100", "001011"));
  CHECK(code_of(SkewShape{}).length() == 0);
}

TEST_CASE("shape_of") {
  CHECK(shape_of(code("10", "01")) == parse_shape("1"));
  CHECK(shape_of(code("111101110100", "010011101111")) ==
        parse_shape("8874/411"));
  CHECK(prefix_violation(bits_from_string("01"), bits_from_string("10")) == 1);
  CHECK_THROWS_AS(shape_of(code("01", "10")), InputError);
  CHECK_THROWS_AS(shape_of(code("10", "0")), InputError);
  CHECK_THROWS_AS(shape_of(code("11", "01")), InputError);
}

TEST_CASE("rank from code") {
  CHECK(rank_from_code(code_of(parse_shape("8874/411"))) == 4);
  CHECK(rank_from_code(Code{}) == 0);
  CHECK(rank_from_code(code_of(parse_shape("332/1"))) == 3);
}

TEST_CASE("strip removal examples") {
  auto [empty, one] = remove_strip(code("10", "01"), 1, 1);
  CHECK(shape_of(empty).empty());
  CHECK(one.height == 0);

  const Code big = code_of(parse_shape("8874/411"));
  auto [after, r] = remove_strip(big, 1, 11);
  CHECK(r.height == 3);
  CHECK(r.size == 11);
  CHECK(is_border_strip(removed_cells(big, after)));

  // Zeros of c at columns 5 and 9 lie strictly inside: a valid removal.
  auto [after2, r2] = remove_strip(big, 2, 9);
  CHECK(r2.height == 2);
  CHECK(shape_of(after2) == parse_shape("8631/411"));

  CHECK_THROWS_AS(remove_strip(code_of(parse_shape("21/1")), 1, 3), InputError);
  CHECK_FALSE(can_remove_strip(code_of(parse_shape("21/1")), 1, 3));
  CHECK_THROWS_AS(remove_strip(big, 0, 3), InputError);
  CHECK_THROWS_AS(remove_strip(big, 2, 40), InputError);
  CHECK_THROWS_AS(remove_strip(big, 5, 1), InputError);
}

TEST_CASE("greedy tableau examples") {
  auto g = greedy_tableau(parse_shape("8874/411"));
  CHECK(pairs_of(g) ==
        std::vector<std::pair<int, int>>{{1, 12}, {3, 11}, {4, 5}, {8, 9}});
  CHECK(total_height(g) == 5);
  std::vector<int> heights;
  for (const auto& r : g) heights.push_back(r.height);
  std::sort(heights.rbegin(), heights.rend());
  CHECK(heights == std::vector<int>{3, 2, 0, 0});

  auto single = greedy_tableau(parse_shape("1"));
  REQUIRE(single.size() == 1);
  CHECK(single[0].height == 0);

  auto small = greedy_tableau(parse_shape("332/1"));
  CHECK(pairs_of(small) == std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {4, 5}});
  CHECK(total_height(small) == 2);
}

TEST_CASE("code properties over a box") {
  for (const auto& s : enumerate_shapes({5, 5, 12})) {
    const Code c = code_of(s);
    CHECK(shape_of(c) == s);
    CHECK(rank_from_code(c) == diagonal_rank(s));
    const auto greedy = greedy_tableau(s);
    CHECK(static_cast<int>(greedy.size()) == diagonal_rank(s));
    CHECK(total_height(greedy) == z_statistic(s).total);

    for (int i = 1; i <= c.length(); ++i)
      for (int p = 1; i + p <= c.length(); ++p) {
        if (!can_remove_strip(c, i, p)) continue;
        auto [after, r] = remove_strip(c, i, p);
        const auto cells = removed_cells(c, after);
        CHECK(static_cast<int>(cells.size()) == p);
        CHECK(is_border_strip(cells));
        int rows = 0;
        std::set<int> seen;
        for (auto q : cells) seen.insert(q.row);
        rows = static_cast<int>(seen.size());
        CHECK(r.height == rows - 1);
        std::set<Square> left;
        for (auto q : frame_shape_of(c).cells()) left.insert(q);
        for (auto q : cells) CHECK(left.erase(q) == 1);
        const auto rest = frame_shape_of(after).cells();
        CHECK(std::set<Square>(rest.begin(), rest.end()) == left);
        Code back = after;
        std::swap(back.c[i - 1], back.c[i + p - 1]);
        CHECK(back == c);
      }
  }
}

}
