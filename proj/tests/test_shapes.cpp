#include "doctest.h"

#include "oracles.hpp"
#include "skewrank/error.hpp"
#include "skewrank/shapes.hpp"

using namespace skewrank;

namespace {

SkewShape shape(const char* text) { return parse_shape(text); }

int straight_rank(const Partition& l) {
  int r = 0;
  while (l[r + 1] >= r + 1) ++r;
  return r;
}

}  // namespace

TEST_SUITE("shapes") {

TEST_CASE("parse and format") {
  SkewShape s = shape("8874/411");
  CHECK(s.lambda().parts() == std::vector<int>{8, 8, 7, 4});
  CHECK(s.mu().parts() == std::vector<int>{4, 1, 1});
  CHECK(s.size() == 21);

  CHECK(shape("3").lambda().parts() == std::vector<int>{3});
  CHECK(shape("3").mu().empty());

  SkewShape wide = shape("10,9,2/3,1");
  CHECK(wide.lambda().parts() == std::vector<int>{10, 9, 2});
  CHECK(wide.mu().parts() == std::vector<int>{3, 1});
  CHECK(format_shape(wide) == "10,9,2/31");
  CHECK(parse_shape(format_shape(wide)) == wide);
  CHECK(shape("12,").lambda().parts() == std::vector<int>{12});
  CHECK(format_shape(shape("12,")) == "12,");
  CHECK(format_shape(s) == "8874/411");
}

TEST_CASE("malformed literals") {
  for (const char* bad : {"", "/1", "8874/", "12/3 ", "2/3", "122", "1,,2",
                          "0", "a1", "3/-1", "21/0x"})
    CHECK_THROWS_AS(parse_shape(bad), InputError);
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
}

TEST_CASE("diagonal rank") {
  CHECK(diagonal_rank(shape("8874/411")) == 4);
  CHECK(diagonal_rank(SkewShape{}) == 0);
  CHECK(diagonal_rank(shape("555")) == 3);
}

TEST_CASE("rotation") {
  CHECK(rotate180(shape("21")) == shape("22/1"));
  SkewShape r = rotate180(shape("8874/411"));
  CHECK(diagonal_rank(r) == 4);
  CHECK(r.size() == 21);
  CHECK(rotate180(SkewShape{}).empty());
  CHECK(rotate180(r) == shape("8874/411"));
}

TEST_CASE("components") {
  CHECK(connected_components(shape("8874/411")).size() == 1);
  auto parts = connected_components(shape("311/11"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == shape("1"));
  CHECK(parts[1] == shape("2"));
  CHECK(connected_components(SkewShape{}).empty());
}

TEST_CASE("normalize") {
  CHECK(normalize(shape("54/44")) == shape("1"));
  CHECK(normalize(shape("8874/411")) == shape("8874/411"));
  CHECK(normalize(shape("311/11")) == shape("311/11"));
  CHECK(connected_components(normalize(shape("311/11"))).size() == 2);
}

TEST_CASE("shape from cells") {
  SkewShape s = shape_from_cells({{5, 7}, {5, 8}, {4, 8}});
  CHECK(s == shape("22/1"));
  CHECK_THROWS_AS(shape_from_cells({{1, 1}, {2, 2}, {1, 2}, {2, 3}, {3, 1}}),
                  InputError);
}

TEST_CASE("enumeration examples") {
  auto one = enumerate_shapes({1, 1, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == shape("1"));
  CHECK(enumerate_shapes({0, 0, 0}).empty());
  auto four = enumerate_shapes({2, 2, 4});
  auto brute = oracle::shapes_in_box(2, 2, 4);
  CHECK(std::set<SkewShape>(four.begin(), four.end()) == brute);
  CHECK(four.size() == brute.size());
}

TEST_CASE("enumeration matches the double loop") {
  for (auto [r, c, n] : {std::tuple{3, 3, 9}, {4, 3, 7}, {3, 5, 8}, {4, 4, 16}}) {
    auto got = enumerate_shapes({r, c, n});
    auto want = oracle::shapes_in_box(r, c, n);
    CHECK(got.size() == want.size());
    CHECK(std::set<SkewShape>(got.begin(), got.end()) == want);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("connected enumeration") {
  long connected = 0;
  for (const auto& s : enumerate_shapes({4, 4, 9}))
    connected += connected_components(s).size() == 1;
  auto only = enumerate_shapes({4, 4, 9, true});
  CHECK(static_cast<long>(only.size()) == connected);
  for (const auto& s : only) CHECK(connected_components(s).size() == 1);
}

TEST_CASE("shape properties over a box") {
  for (const auto& s : enumerate_shapes({5, 5, 25})) {
    CHECK(static_cast<int>(s.cells().size()) ==
          s.lambda().size() - s.mu().size());
    CHECK(normalize(s) == s);
    CHECK(diagonal_rank(rotate180(s)) == diagonal_rank(s));
    int sum = 0;
    for (const auto& c : connected_components(s)) sum += diagonal_rank(c);
    CHECK(sum == diagonal_rank(s));
    if (s.mu().empty()) CHECK(diagonal_rank(s) == straight_rank(s.lambda()));
    CHECK(shape_from_cells(s.cells()) == s);
    CHECK(parse_shape(format_shape(s)) == s);
  }
}

}
