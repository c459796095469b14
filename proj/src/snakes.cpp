#include "skewrank/snakes.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "skewrank/error.hpp"

namespace skewrank {

namespace {

// Lower and upper step m are the same geometric edge: same direction and,
// since both walks start at the same point, the same number of earlier
// horizontal steps.
bool shared_edge(const Code& code, int m) {
  if (code.top(m) != code.bottom(m)) return false;
  int ones_c = 0, ones_d = 0;
  for (int j = 1; j < m; ++j) {
    ones_c += code.top(j);
    ones_d += code.bottom(j);
  }
  return ones_c == ones_d;
}

// Strict Up/Left zigzag from entry to exit. The longer budget moves first;
// on a tie a left snake moves Left first and a right snake Up first.
std::vector<Square> zigzag(Square entry, Square exit, bool up_on_tie) {
  int up = entry.row - exit.row;
  int left = entry.col - exit.col;
  ensure(up >= 0 && left >= 0, "snake exit is not above-left of its entry");
  ensure(std::abs(up - left) <= 1, "snake endpoints are not zigzag-aligned");
  bool go_up = up != left ? up > left : up_on_tie;
  std::vector<Square> path{entry};
  Square at = entry;
  while (up + left > 0) {
    if (go_up) {
      --at.row;
      --up;
    } else {
      --at.col;
      --left;
    }
    path.push_back(at);
    go_up = !go_up;
  }
  return path;
}

// Subscript from the code counts (m + 1 = excess of partners beyond i).
int code_subscript(const Code& code, int i) {
  int excess = 0;
  if (code.is_left(i)) {
    for (int j = i + 1; j <= code.length(); ++j)
      excess += code.is_right(j) - code.is_left(j);
  } else {
    for (int j = 1; j < i; ++j) excess += code.is_left(j) - code.is_right(j);
  }
  return excess - 1;
}

std::vector<int> columns_where(const Code& code, bool left) {
  std::vector<int> out;
  for (int m = 1; m <= code.length(); ++m)
    if (left ? code.is_left(m) : code.is_right(m)) out.push_back(m);
  return out;
}

}  // namespace

std::vector<Snake> snakes_of(const Code& code) {
  const SkewShape frame = frame_shape_of(code);
  std::vector<Snake> out;
  for (int i = 1; i <= code.length(); ++i) {
    Snake s;
    s.index = i;
    if (shared_edge(code, i)) {
      s.kind = SnakeKind::Empty;
      out.push_back(std::move(s));
      continue;
    }
    s.squares = zigzag(lower_square(code, i), upper_square(code, i),
                       code.is_right(i));
    for (const auto& sq : s.squares)
      ensure(frame.contains(sq), "snake " + std::to_string(i) +
                                     " leaves the shape");
    s.length = static_cast<int>(s.squares.size()) - 1;
    if (code.is_left(i))
      s.kind = SnakeKind::Left;
    else if (code.is_right(i))
      s.kind = SnakeKind::Right;
    else
      s.kind = SnakeKind::Odd;
    const bool even = s.length % 2 == 0;
    ensure(even == (s.kind != SnakeKind::Odd),
           "snake " + std::to_string(i) + " has the wrong length parity");
    if (s.kind != SnakeKind::Odd)
      ensure(code_subscript(code, i) * 2 == s.length,
             "snake " + std::to_string(i) +
                 " length disagrees with the code count");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Snake> snakes_of(const SkewShape& s) {
  return snakes_of(code_of(normalize(s)));
}

std::vector<Link> links_of(const Snake& snake) {
  std::vector<Link> out;
  for (std::size_t p = 1; p < snake.squares.size(); ++p)
    out.push_back({snake.index, static_cast<int>(p), snake.squares[p - 1],
                   snake.squares[p]});
  return out;
}

SnakeSequence snake_sequence(const Code& code) {
  SnakeSequence ss;
  for (const auto& snake : snakes_of(code)) {
    SnakeSymbol sym;
    sym.kind = snake.kind == SnakeKind::Empty ? SnakeKind::Odd : snake.kind;
    if (sym.kind != SnakeKind::Odd) sym.subscript = snake.length / 2;
    ss.push_back(sym);
  }
  return ss;
}

SnakeSequence snake_sequence(const SkewShape& s) {
  return snake_sequence(code_of(normalize(s)));
}

std::string to_string(const SnakeSequence& ss) {
  std::string out;
  for (const auto& sym : ss) {
    if (!out.empty()) out.push_back(' ');
    switch (sym.kind) {
      case SnakeKind::Left:
        out += "L" + std::to_string(sym.subscript);
        break;
      case SnakeKind::Right:
        out += "R" + std::to_string(sym.subscript);
        break;
      default:
        out += "O";
    }
  }
  return out;
}

IntervalSet::IntervalSet(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

Partition IntervalSet::type() const {
  std::vector<int> gaps;
  for (const auto& [u, v] : pairs_) gaps.push_back(v - u);
  return sorted_partition(std::move(gaps));
}

std::string to_string(const IntervalSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.pairs().size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(set.pairs()[i].first) + "," +
           std::to_string(set.pairs()[i].second) + ")";
  }
  return out + "}";
}

IntervalSet canonical_pairing(const Code& code) {
  std::vector<int> open;
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= code.length(); ++m) {
    if (code.is_left(m)) open.push_back(m);
    if (code.is_right(m)) {
      ensure(!open.empty(), "unbalanced snake sequence");
      pairs.emplace_back(open.back(), m);
      open.pop_back();
    }
  }
  ensure(open.empty(), "unbalanced snake sequence");
  return IntervalSet(std::move(pairs));
}

IntervalSet canonical_pairing(const SkewShape& s) {
  return canonical_pairing(code_of(normalize(s)));
}

std::vector<IntervalSet> interval_sets(const Code& code) {
  const auto lefts = columns_where(code, true);
  const auto rights = columns_where(code, false);
  std::vector<IntervalSet> out;
  std::vector<bool> used(rights.size(), false);
  std::vector<std::pair<int, int>> pairs;
  std::function<void(int)> assign = [&](int li) {
    if (li < 0) {
      out.emplace_back(pairs);
      return;
    }
    for (std::size_t ri = 0; ri < rights.size(); ++ri) {
      if (used[ri] || rights[ri] < lefts[static_cast<std::size_t>(li)])
        continue;
      used[ri] = true;
      pairs.emplace_back(lefts[static_cast<std::size_t>(li)], rights[ri]);
      assign(li - 1);
      pairs.pop_back();
      used[ri] = false;
    }
  };
  assign(static_cast<int>(lefts.size()) - 1);
  return out;
}

std::vector<IntervalSet> interval_sets(const SkewShape& s) {
  return interval_sets(code_of(normalize(s)));
}

BigInt is_count(const Code& code) {
  BigInt left = 1, right = 1;
  for (const auto& snake : snakes_of(code)) {
    if (snake.kind == SnakeKind::Left) left *= 1 + snake.length / 2;
    if (snake.kind == SnakeKind::Right) right *= 1 + snake.length / 2;
  }
  ensure(left == right, "interval-set count differs between left and right "
                        "snakes");
  return left;
}

BigInt is_count(const SkewShape& s) { return is_count(code_of(normalize(s))); }

int crossings(const IntervalSet& set) {
  int c = 0;
  for (const auto& [ui, vi] : set.pairs())
    for (const auto& [uj, vj] : set.pairs())
      if (ui < uj && uj < vi && vi < vj) ++c;
  return c;
}

bool is_interval_set_of(const Code& code, const IntervalSet& set) {
  std::vector<int> us, vs;
  for (const auto& [u, v] : set.pairs()) {
    if (u >= v) return false;
    us.push_back(u);
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  return us == columns_where(code, true) && vs == columns_where(code, false);
}

ZStatistic z_statistic(const Code& code) {
  ZStatistic z;
  const IntervalSet pairing = canonical_pairing(code);
  for (const auto& [u, v] : pairing.pairs()) {
    int zeros = 0;
    for (int j = u + 1; j < v; ++j) zeros += code.top(j) == 0;
    z.per_pair.push_back(zeros);
    z.total += zeros;
  }
  return z;
}

ZStatistic z_statistic(const SkewShape& s) {
  const SkewShape n = normalize(s);
  ZStatistic z = z_statistic(code_of(n));
  int greedy = 0;
  for (const auto& r : greedy_tableau(n)) greedy += r.height;
  ensure(greedy == z.total, "z statistic differs from the greedy height");
  return z;
}

}  // namespace skewrank
