#include "skewrank/decomp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "skewrank/error.hpp"

namespace skewrank {

bool is_border_strip(const std::vector<Square>& cells) {
  if (cells.empty()) return false;
  std::set<Square> set(cells.begin(), cells.end());
  if (set.size() != cells.size()) return false;
  for (const auto& c : set)
    if (set.count({c.row, c.col + 1}) && set.count({c.row + 1, c.col}) &&
        set.count({c.row + 1, c.col + 1}))
      return false;
  std::set<Square> seen{*set.begin()};
  std::deque<Square> queue{*set.begin()};
  while (!queue.empty()) {
    Square c = queue.front();
    queue.pop_front();
    for (Square n : {Square{c.row - 1, c.col}, Square{c.row + 1, c.col},
                     Square{c.row, c.col - 1}, Square{c.row, c.col + 1}})
      if (set.count(n) && seen.insert(n).second) queue.push_back(n);
  }
  if (seen.size() != set.size()) return false;
  try {
    shape_from_cells(cells);
  } catch (const InputError&) {
    return false;
  }
  return true;
}

BorderStrip make_border_strip(std::vector<Square> cells) {
  ensure(is_border_strip(cells), "cells do not form a border strip");
  std::set<Square> set(cells.begin(), cells.end());
  Square at = *std::min_element(cells.begin(), cells.end(),
                                [](const Square& a, const Square& b) {
                                  return a.row != b.row ? a.row > b.row
                                                        : a.col < b.col;
                                });
  BorderStrip strip;
  const int bottom = at.row;
  strip.squares.push_back(at);
  while (strip.squares.size() < set.size()) {
    if (set.count({at.row, at.col + 1}))
      ++at.col;
    else
      --at.row;
    ensure(set.count(at) == 1, "border strip is not a right/up path");
    strip.squares.push_back(at);
  }
  strip.height = bottom - strip.squares.back().row;
  return strip;
}

Decomposition::Decomposition(std::vector<BorderStrip> strips,
                             std::vector<Link> links_used)
    : strips_(std::move(strips)), links_used_(std::move(links_used)) {
  std::sort(strips_.begin(), strips_.end());
}

Partition Decomposition::type() const {
  std::vector<int> sizes;
  for (const auto& s : strips_) sizes.push_back(s.size());
  return sorted_partition(std::move(sizes));
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Decomposition build_from_links(const std::vector<Square>& cells,
                               const std::vector<Snake>& snakes,
                               const LinkChoice& choice) {
  if (choice.size() != snakes.size())
    throw InputError("link choice must list one entry per snake");
  std::vector<Square> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](Square s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    ensure(it != sorted.end() && *it == s, "link square outside the shape");
    return static_cast<int>(it - sorted.begin());
  };
  DisjointSets sets(sorted.size());
  std::vector<Link> used;
  for (std::size_t k = 0; k < snakes.size(); ++k) {
    std::vector<int> positions = choice[k];
    std::sort(positions.begin(), positions.end());
    const int n = snakes[k].link_count();
    for (std::size_t p = 0; p < positions.size(); ++p) {
      if (positions[p] < 1 || positions[p] > n)
        throw InputError("link position out of range for snake " +
                         std::to_string(snakes[k].index));
      if (p > 0 && positions[p] - positions[p - 1] < 2)
        throw InputError("consecutive links chosen on snake " +
                         std::to_string(snakes[k].index));
      const Square a = snakes[k].squares[positions[p] - 1];
      const Square b = snakes[k].squares[positions[p]];
      sets.unite(index_of(a), index_of(b));
      used.push_back({snakes[k].index, positions[p], a, b});
    }
  }
  std::map<int, std::vector<Square>> groups;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    groups[sets.find(static_cast<int>(i))].push_back(sorted[i]);
  std::vector<BorderStrip> strips;
  for (auto& [root, group] : groups)
    strips.push_back(make_border_strip(std::move(group)));
  ensure(strips.size() + used.size() == sorted.size(),
         "strip count differs from cells minus links");
  return Decomposition(std::move(strips), std::move(used));
}

std::vector<Square> snake_cells(const std::vector<Snake>& snakes) {
  std::vector<Square> cells;
  for (const auto& s : snakes)
    cells.insert(cells.end(), s.squares.begin(), s.squares.end());
  return cells;
}

// Mixed-radix walk over per-snake options, first snake most significant
// unless `last_major`.
void for_each_choice(const std::vector<std::vector<std::vector<int>>>& options,
                     const std::function<void(const LinkChoice&)>& f,
                     bool last_major = false) {
  const std::size_t n = options.size();
  LinkChoice choice(n);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      f(choice);
      return;
    }
    const std::size_t k = last_major ? n - 1 - depth : depth;
    for (const auto& opt : options[k]) {
      choice[k] = opt;
      rec(depth + 1);
    }
  };
  rec(0);
}

}  // namespace

Decomposition decomposition_from_links(const std::vector<Snake>& snakes,
                                       const LinkChoice& choice) {
  return build_from_links(snake_cells(snakes), snakes, choice);
}

Decomposition decomposition_from_links(const SkewShape& s,
                                       const LinkChoice& choice) {
  const SkewShape n = normalize(s);
  return build_from_links(n.cells(), snakes_of(n), choice);
}

BigInt fibonacci(int n) {
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::vector<std::vector<int>> nonconsecutive_subsets(int links) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    out.push_back(current);
    for (int p = next; p <= links; ++p) {
      current.push_back(p);
      rec(p + 2);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<int>> maximal_link_sets(int links) {
  if (links <= 0) return {{}};
  if (links % 2 == 1) {
    std::vector<int> forced;
    for (int p = 1; p <= links; p += 2) forced.push_back(p);
    return {forced};
  }
  const int m = links / 2;
  std::vector<std::vector<int>> out;
  for (int g = 0; g <= m; ++g) {
    std::vector<int> set;
    for (int p = 1; p <= 2 * g - 1; p += 2) set.push_back(p);
    for (int p = 2 * g + 2; p <= 2 * m; p += 2) set.push_back(p);
    out.push_back(std::move(set));
  }
  return out;
}

int min_strip_count(const SkewShape& s) {
  const SkewShape n = normalize(s);
  int links = 0;
  for (const auto& snake : snakes_of(n)) links += (snake.link_count() + 1) / 2;
  return n.size() - links;
}

void for_each_decomposition(
    const SkewShape& s, const std::function<void(const Decomposition&)>& f) {
  const SkewShape n = normalize(s);
  const auto snakes = snakes_of(n);
  const auto cells = n.cells();
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& snake : snakes)
    options.push_back(nonconsecutive_subsets(snake.link_count()));
  for_each_choice(options, [&](const LinkChoice& choice) {
    f(build_from_links(cells, snakes, choice));
  });
}

std::vector<Decomposition> all_decompositions(const SkewShape& s) {
  std::vector<Decomposition> out;
  for_each_decomposition(s, [&](const Decomposition& d) { out.push_back(d); });
  return out;
}

void for_each_minimal_decomposition(
    const SkewShape& s, const std::function<void(const Decomposition&)>& f) {
  const SkewShape n = normalize(s);
  const auto snakes = snakes_of(n);
  const auto cells = n.cells();
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& snake : snakes)
    options.push_back(maximal_link_sets(snake.link_count()));
  for_each_choice(options, [&](const LinkChoice& choice) {
    f(build_from_links(cells, snakes, choice));
  });
}

std::vector<Decomposition> minimal_decompositions(const SkewShape& s) {
  std::vector<Decomposition> out;
  for_each_minimal_decomposition(
      s, [&](const Decomposition& d) { out.push_back(d); });
  return out;
}

CountingReport counting_report(const SkewShape& s, long enumeration_limit) {
  const SkewShape n = normalize(s);
  const Code code = code_of(n);
  const auto snakes = snakes_of(code);
  CountingReport report;
  report.total = 1;
  BigInt even_product = 1;
  for (const auto& snake : snakes) {
    report.total *= fibonacci(static_cast<int>(snake.squares.size()) + 1);
    if (snake.length >= 0 && snake.length % 2 == 0)
      even_product *= 1 + snake.length / 2;
  }
  report.is = is_count(code);
  report.mbsd = report.is * report.is;
  ensure(report.mbsd == even_product,
         "minimal decomposition count: is^2 differs from the snake product");
  report.mbst = factorial(static_cast<unsigned>(rank_from_code(code))) *
                report.is;

  std::map<Partition, BigInt> is_by_type;
  BigInt listed = 0;
  for (const auto& set : interval_sets(code)) {
    is_by_type[set.type()] += 1;
    listed += 1;
  }
  ensure(listed == report.is, "interval-set enumeration disagrees with is");
  for (const auto& [type, count] : is_by_type)
    report.by_type[type] = count * report.is;

  if (report.mbsd <= enumeration_limit) {
    std::map<Partition, BigInt> seen;
    BigInt total = 0;
    const int r = rank_from_code(code);
    for_each_minimal_decomposition(n, [&](const Decomposition& d) {
      ensure(d.size() == r, "minimal decomposition with the wrong strip count");
      seen[d.type()] += 1;
      total += 1;
    });
    ensure(total == report.mbsd, "enumerated minimal decompositions != is^2");
    ensure(seen == report.by_type, "minimal decompositions by type differ");
  }
  return report;
}

int Tableau::height() const {
  int h = 0;
  for (const auto& r : removals) h += r.height;
  return h;
}

std::vector<int> Tableau::type() const {
  std::vector<int> sizes;
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    sizes.push_back(it->size);
  return sizes;
}

std::vector<Tableau> tableaux_of_interval_set(const SkewShape& s,
                                              const IntervalSet& set) {
  const Code start = code_of(normalize(s));
  if (!is_interval_set_of(start, set))
    throw InputError("not an interval set of " + format_shape(s));
  const auto& pairs = set.pairs();
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Tableau> out;
  do {
    Tableau t;
    Code code = start;
    std::vector<BorderStrip> strips;
    for (std::size_t idx : order) {
      const auto [u, v] = pairs[idx];
      ensure(can_remove_strip(code, u, v - u),
             "interval-set ordering produced an invalid removal");
      auto [next, removal] = remove_strip(code, u, v - u);
      BorderStrip strip = make_border_strip(removed_cells(code, next));
      ensure(strip.init() == removal.init && strip.fin() == removal.fin &&
                 strip.height == removal.height,
             "strip geometry disagrees with the code");
      strips.push_back(std::move(strip));
      t.removals.push_back(removal);
      code = std::move(next);
    }
    ensure(code.c == code.d, "tableau did not exhaust the shape");
    t.decomposition = Decomposition(std::move(strips));
    out.push_back(std::move(t));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {

// Column pair of a strip that can be removed from the current code, or
// {0, 0}.
std::pair<int, int> removal_columns(const Code& code, const BorderStrip& b) {
  std::vector<Square> want = b.squares;
  std::sort(want.begin(), want.end());
  for (int m = 1; m + b.size() <= code.length(); ++m) {
    if (code.top(m) != 1 || lower_square(code, m) != b.init()) continue;
    const int end = m + b.size();
    if (!can_remove_strip(code, m, b.size())) continue;
    auto [next, removal] = remove_strip(code, m, b.size());
    std::vector<Square> got = removed_cells(code, next);
    std::sort(got.begin(), got.end());
    if (got == want) return {m, end};
  }
  return {0, 0};
}

IntervalSet read_interval_set(Code code, std::vector<BorderStrip> strips,
                              bool pick_last) {
  std::vector<std::pair<int, int>> pairs;
  while (!strips.empty()) {
    int chosen = -1;
    std::pair<int, int> cols{0, 0};
    for (int i = 0; i < static_cast<int>(strips.size()); ++i) {
      auto found = removal_columns(code, strips[i]);
      if (found.first != 0) {
        chosen = i;
        cols = found;
        if (!pick_last) break;
      }
    }
    ensure(chosen >= 0, "no strip of the decomposition is removable");
    code = remove_strip(code, cols.first, cols.second - cols.first).first;
    pairs.push_back(cols);
    strips.erase(strips.begin() + chosen);
  }
  ensure(code.c == code.d, "decomposition did not exhaust the shape");
  return IntervalSet(std::move(pairs));
}

}  // namespace

IntervalSet interval_set_of(const SkewShape& s, const Decomposition& d) {
  const Code code = code_of(normalize(s));
  if (d.size() != rank_from_code(code))
    throw InputError("interval_set_of needs a minimal decomposition");
  IntervalSet first = read_interval_set(code, d.strips(), false);
  IntervalSet last = read_interval_set(code, d.strips(), true);
  ensure(first == last, "interval set depends on the removal order");
  ensure(is_interval_set_of(code, first),
         "decomposition read back to a non-interval set");
  return first;
}

LatinSquare latin_square(const SkewShape& s) {
  const SkewShape n = normalize(s);
  const Code code = code_of(n);
  const auto snakes = snakes_of(code);
  const auto cells = n.cells();

  std::vector<std::vector<std::vector<int>>> right_opts, left_opts;
  std::vector<std::size_t> right_idx, left_idx;
  LinkChoice fixed(snakes.size());
  for (std::size_t k = 0; k < snakes.size(); ++k) {
    auto sets = maximal_link_sets(snakes[k].link_count());
    if (snakes[k].kind == SnakeKind::Right) {
      right_opts.push_back(std::move(sets));
      right_idx.push_back(k);
    } else if (snakes[k].kind == SnakeKind::Left) {
      left_opts.push_back(std::move(sets));
      left_idx.push_back(k);
    } else {
      fixed[k] = sets.front();
    }
  }

  LatinSquare sq;
  sq.legend = interval_sets(code);
  // Later snakes vary slowest, as in the interval-set order.
  for_each_choice(
      right_opts, [&](const LinkChoice& c) { sq.row_choices.push_back(c); },
      true);
  for_each_choice(
      left_opts, [&](const LinkChoice& c) { sq.column_choices.push_back(c); },
      true);
  const std::size_t t = sq.legend.size();
  ensure(sq.row_choices.size() == t && sq.column_choices.size() == t,
         "latin square is not square of side is");

  for (const auto& rc : sq.row_choices) {
    std::vector<Decomposition> drow;
    std::vector<int> irow;
    for (const auto& cc : sq.column_choices) {
      LinkChoice choice = fixed;
      for (std::size_t i = 0; i < right_idx.size(); ++i)
        choice[right_idx[i]] = rc[i];
      for (std::size_t i = 0; i < left_idx.size(); ++i)
        choice[left_idx[i]] = cc[i];
      Decomposition d = build_from_links(cells, snakes, choice);
      const IntervalSet set = interval_set_of(n, d);
      auto it = std::find(sq.legend.begin(), sq.legend.end(), set);
      ensure(it != sq.legend.end(), "decomposition maps outside the legend");
      irow.push_back(static_cast<int>(it - sq.legend.begin()) + 1);
      drow.push_back(std::move(d));
    }
    sq.decompositions.push_back(std::move(drow));
    sq.indices.push_back(std::move(irow));
  }

  auto is_permutation = [t](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != static_cast<int>(i) + 1) return false;
    return v.size() == t;
  };
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<int> column;
    for (std::size_t j = 0; j < t; ++j) column.push_back(sq.indices[j][i]);
    ensure(is_permutation(sq.indices[i]) && is_permutation(column),
           "interval-set index matrix is not a Latin square");
  }
  return sq;
}

}  // namespace skewrank
