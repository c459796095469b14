#include "skewrank/codes.hpp"

#include <algorithm>

#include "skewrank/error.hpp"

namespace skewrank {

namespace {

using Bits = std::vector<std::uint8_t>;

// Walk from (0, rows) to (width, 0): in row i (bottom to top) go east to
// parts_i, then north.
Bits walk(const Partition& parts, int rows, int width) {
  Bits out;
  int x = 0;
  for (int i = rows; i >= 1; --i) {
    for (; x < parts[i]; ++x) out.push_back(1);
    out.push_back(0);
  }
  for (; x < width; ++x) out.push_back(1);
  return out;
}

// Row ends read back from a walk: entry i-1 is parts_i.
std::vector<int> unwalk(const Bits& bits) {
  const int rows = static_cast<int>(std::count(bits.begin(), bits.end(), 0));
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  int x = 0, row = rows;
  for (auto b : bits) {
    if (b) {
      ++x;
    } else {
      parts[static_cast<std::size_t>(row - 1)] = x;
      --row;
    }
  }
  return parts;
}

struct Point {
  int x;
  int y;
};

// Start point of step m (1-based) of a walk from (0, rows).
Point step_origin(const Bits& bits, int m) {
  const int rows = static_cast<int>(std::count(bits.begin(), bits.end(), 0));
  Point p{0, rows};
  for (int i = 0; i < m - 1; ++i) {
    if (bits[static_cast<std::size_t>(i)])
      ++p.x;
    else
      --p.y;
  }
  return p;
}

}  // namespace

std::string bits_to_string(const Bits& bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& text) {
  Bits out;
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw InputError("code rows must consist of '0' and '1'");
    out.push_back(ch == '1');
  }
  return out;
}

std::optional<int> prefix_violation(const Bits& c, const Bits& d) {
  int balance = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 1 && d[j] == 0) ++balance;
    if (c[j] == 0 && d[j] == 1) --balance;
    if (balance < 0) return static_cast<int>(j) + 1;
  }
  if (balance != 0) return static_cast<int>(c.size()) + 1;
  return std::nullopt;
}

Code code_of(const SkewShape& s) {
  if (s.empty()) return {};
  const int rows = s.rows();
  const int width = s.lambda()[1];
  Code code{walk(s.lambda(), rows, width), walk(s.mu(), rows, width)};
  ensure(code.c.size() == code.d.size(), "envelope walks differ in length");
  return code;
}

SkewShape frame_shape_of(const Code& code) {
  if (code.c.size() != code.d.size())
    throw InputError("code rows have different lengths");
  if (auto bad = prefix_violation(code.c, code.d))
    throw InputError("code violates the prefix condition at column " +
                     std::to_string(*bad));
  return SkewShape(Partition(unwalk(code.c)), Partition(unwalk(code.d)));
}

SkewShape shape_of(const Code& code) { return normalize(frame_shape_of(code)); }

int rank_from_code(const Code& code) {
  int r = 0;
  for (int m = 1; m <= code.length(); ++m) r += code.is_right(m);
  return r;
}

Square lower_square(const Code& code, int m) {
  const Point p = step_origin(code.c, m);
  if (code.top(m)) return {p.y, p.x + 1};  // square above a horizontal step
  return {p.y, p.x};                       // square left of a vertical step
}

Square upper_square(const Code& code, int m) {
  const Point p = step_origin(code.d, m);
  if (code.bottom(m)) return {p.y + 1, p.x + 1};  // square below
  return {p.y, p.x + 1};                          // square to the right
}

bool can_remove_strip(const Code& code, int start, int size) {
  const int end = start + size;
  if (size < 1 || start < 1 || end > code.length()) return false;
  if (code.top(start) != 1 || code.top(end) != 0) return false;
  Bits c = code.c;
  c[static_cast<std::size_t>(start - 1)] = 0;
  c[static_cast<std::size_t>(end - 1)] = 1;
  return !prefix_violation(c, code.d).has_value();
}

std::pair<Code, StripRemoval> remove_strip(const Code& code, int start,
                                           int size) {
  const int end = start + size;
  if (size < 1 || start < 1 || end > code.length())
    throw InputError("strip columns out of range");
  if (code.top(start) != 1 || code.top(end) != 0)
    throw InputError("strip needs c_start = 1 and c_end = 0");
  Code next = code;
  next.c[static_cast<std::size_t>(start - 1)] = 0;
  next.c[static_cast<std::size_t>(end - 1)] = 1;
  if (auto bad = prefix_violation(next.c, next.d))
    throw InputError("strip (" + std::to_string(start) + "," +
                     std::to_string(end) +
                     ") is not removable: prefix condition fails at column " +
                     std::to_string(*bad));
  StripRemoval r;
  r.start = start;
  r.end = end;
  r.size = size;
  for (int h = start + 1; h < end; ++h) r.height += code.top(h) == 0;
  r.init = lower_square(code, start);
  r.fin = lower_square(code, end);
  return {std::move(next), r};
}

std::vector<Square> removed_cells(const Code& before, const Code& after) {
  const auto outer = unwalk(before.c);
  const auto inner = unwalk(after.c);
  std::vector<Square> out;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (int j = inner[i] + 1; j <= outer[i]; ++j)
      out.push_back({static_cast<int>(i) + 1, j});
  return out;
}

std::vector<StripRemoval> greedy_tableau(const SkewShape& s) {
  Code code = code_of(normalize(s));
  std::vector<StripRemoval> out;
  const int k = code.length();
  for (int start = 1; start <= k; ++start) {
    if (!code.is_left(start)) continue;
    int partner = 0;
    for (int end = k; end > start && partner == 0; --end)
      if (code.is_right(end) && can_remove_strip(code, start, end - start))
        partner = end;
    ensure(partner != 0, "greedy tableau: no valid partner for column " +
                             std::to_string(start));
    auto [next, removal] = remove_strip(code, start, partner - start);
    code = std::move(next);
    out.push_back(removal);
  }
  ensure(code.c == code.d, "greedy tableau did not exhaust the shape");
  return out;
}

}  // namespace skewrank
