#include "skewrank/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "skewrank/error.hpp"

namespace skewrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (mu_.length() > lambda_.length())
    throw InputError("mu is not contained in lambda");
  for (int i = 1; i <= mu_.length(); ++i)
    if (mu_[i] > lambda_[i]) throw InputError("mu is not contained in lambda");
}

std::vector<Square> SkewShape::cells() const {
  std::vector<Square> out;
  out.reserve(static_cast<std::size_t>(std::max(size(), 0)));
  for (int i = 1; i <= rows(); ++i)
    for (int j = mu_[i] + 1; j <= lambda_[i]; ++j) out.push_back({i, j});
  return out;
}

namespace {

std::vector<int> parse_parts(std::string_view text) {
  if (text.empty()) throw InputError("empty part list in shape literal");
  const bool list = text.find(',') != std::string_view::npos;
  std::vector<int> parts;
  if (!list) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        // A lone multi-digit number containing a zero is unambiguous.
        parts.clear();
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
          throw InputError("malformed shape literal: '" + std::string(text) +
                           "'");
        return {value};
      }
      parts.push_back(ch - '0');
    }
    return parts;
  }
  if (text.back() == ',') {
    // "12," is the list form of a single part.
    if (std::count(text.begin(), text.end(), ',') != 1)
      throw InputError("trailing comma in shape literal");
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || value <= 0)
      throw InputError("malformed part '" + std::string(token) +
                       "' in shape literal");
    parts.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  const std::size_t slash = text.find('/');
  std::string_view lam = text.substr(0, slash);
  std::vector<int> mu_parts;
  if (slash != std::string_view::npos) {
    std::string_view mu = text.substr(slash + 1);
    if (mu.find('/') != std::string_view::npos)
      throw InputError("malformed shape literal: more than one '/'");
    mu_parts = parse_parts(mu);
  }
  std::vector<int> lam_parts = parse_parts(lam);
  for (std::size_t i = 1; i < lam_parts.size(); ++i)
    if (lam_parts[i] > lam_parts[i - 1])
      throw InputError("lambda is not weakly decreasing");
  for (std::size_t i = 1; i < mu_parts.size(); ++i)
    if (mu_parts[i] > mu_parts[i - 1])
      throw InputError("mu is not weakly decreasing");
  return SkewShape(Partition(lam_parts), Partition(mu_parts));
}

std::string format_partition(const Partition& p) {
  const auto& parts = p.parts();
  const bool digits = std::all_of(parts.begin(), parts.end(),
                                  [](int x) { return x <= 9; });
  std::string out;
  if (digits) {
    for (int x : parts) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  if (parts.size() == 1) out.push_back(',');
  return out;
}

std::string format_shape(const SkewShape& s) {
  std::string out = format_partition(s.lambda());
  if (!s.mu().empty()) out += "/" + format_partition(s.mu());
  return out;
}

SkewShape shape_from_cells(std::vector<Square> cells) {
  if (cells.empty()) return {};
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  int min_row = cells.front().row, max_row = cells.back().row;
  int min_col = cells.front().col;
  for (const auto& c : cells) min_col = std::min(min_col, c.col);

  const int rows = max_row - min_row + 1;
  std::vector<int> lo(rows, 0), hi(rows, -1), count(rows, 0);
  for (const auto& c : cells) {
    const int r = c.row - min_row;
    const int col = c.col - min_col + 1;
    if (count[r] == 0) lo[r] = col;
    hi[r] = col;
    ++count[r];
  }
  std::vector<int> lam(rows), mu(rows);
  for (int r = rows - 1; r >= 0; --r) {
    if (count[r] == 0) {
      lam[r] = mu[r] = lam[r + 1];  // the bottom row is never empty
      continue;
    }
    if (hi[r] - lo[r] + 1 != count[r])
      throw InputError("cells do not form a skew diagram (gap in a row)");
    lam[r] = hi[r];
    mu[r] = lo[r] - 1;
  }
  for (int r = 1; r < rows; ++r)
    if (lam[r] > lam[r - 1] || mu[r] > mu[r - 1])
      throw InputError("cells do not form a skew diagram");
  return SkewShape(Partition(lam), Partition(mu));
}

SkewShape normalize(const SkewShape& s) { return shape_from_cells(s.cells()); }

int diagonal_rank(const SkewShape& s) {
  auto in = [&](int i, int j) { return s.contains({i, j}); };
  auto run = [&](int i, int j) {
    int n = 0;
    while (in(i + n, j + n)) ++n;
    return n;
  };
  int plus = 0, minus = 0;
  for (const auto& c : s.cells()) {
    const bool up = in(c.row - 1, c.col), left = in(c.row, c.col - 1);
    if (!up && !left) plus += run(c.row, c.col);
    if (up && left && !in(c.row - 1, c.col - 1)) minus += run(c.row, c.col);
  }
  return plus - minus;
}

SkewShape rotate180(const SkewShape& s) {
  const int h = s.rows() + 1;
  const int k = s.lambda()[1] + 1;
  std::vector<Square> cells;
  for (const auto& c : s.cells()) cells.push_back({h - c.row, k - c.col});
  return shape_from_cells(std::move(cells));
}

std::vector<SkewShape> connected_components(const SkewShape& s) {
  const auto cells = s.cells();
  std::set<Square> unvisited(cells.begin(), cells.end());
  std::vector<std::pair<int, SkewShape>> found;
  while (!unvisited.empty()) {
    std::vector<Square> comp;
    std::deque<Square> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      Square c = queue.front();
      queue.pop_front();
      comp.push_back(c);
      for (Square n : {Square{c.row - 1, c.col}, Square{c.row + 1, c.col},
                       Square{c.row, c.col - 1}, Square{c.row, c.col + 1}}) {
        if (auto it = unvisited.find(n); it != unvisited.end()) {
          unvisited.erase(it);
          queue.push_back(n);
        }
      }
    }
    int bottom = 0;
    for (const auto& c : comp) bottom = std::max(bottom, c.row);
    found.emplace_back(bottom, shape_from_cells(std::move(comp)));
  }
  // Rows are never shared between components, so the bottom row orders them.
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<SkewShape> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

namespace {

// Pre-order DFS with ascending choices visits partitions in lexicographic
// order of their part vectors.
void partitions_in_box(int max_rows, int max_part, std::vector<int>& prefix,
                       const std::function<void(const std::vector<int>&)>& f) {
  f(prefix);
  if (static_cast<int>(prefix.size()) == max_rows) return;
  const int cap = prefix.empty() ? max_part : prefix.back();
  for (int v = 1; v <= cap; ++v) {
    prefix.push_back(v);
    partitions_in_box(max_rows, max_part, prefix, f);
    prefix.pop_back();
  }
}

// mu below lam row by row; `spare` is the cell budget left for the rows
// already chosen. Connected shapes keep mu_i < lam_{i+1}.
void subpartitions(const std::vector<int>& lam, std::vector<int>& prefix,
                   int spare, bool connected,
                   const std::function<void(const std::vector<int>&)>& f) {
  f(prefix);
  const std::size_t i = prefix.size();
  if (i == lam.size()) return;
  int cap = std::min(lam[i], prefix.empty() ? lam[i] : prefix.back());
  if (connected && i + 1 < lam.size()) cap = std::min(cap, lam[i + 1] - 1);
  for (int v = std::max(1, lam[i] - spare); v <= cap; ++v) {
    prefix.push_back(v);
    subpartitions(lam, prefix, spare - (lam[i] - v), connected, f);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_shape(const ShapeBounds& bounds,
                    const std::function<void(const SkewShape&)>& visit) {
  if (bounds.max_rows <= 0 || bounds.max_cols <= 0 || bounds.max_cells <= 0)
    return;
  std::vector<int> lam;
  partitions_in_box(
      bounds.max_rows, bounds.max_cols, lam, [&](const std::vector<int>& l) {
        if (l.empty()) return;
        const int total = std::accumulate(l.begin(), l.end(), 0);
        // A canonical shape has mu_l = 0, so its bottom row is whole.
        std::vector<int> mu;
        subpartitions(l, mu, bounds.max_cells, bounds.connected_only,
                      [&](const std::vector<int>& m) {
          const int cells = total - std::accumulate(m.begin(), m.end(), 0);
          if (cells == 0 || cells > bounds.max_cells) return;
          if (m.size() == l.size()) return;
          SkewShape s{Partition(l), Partition(m)};
          if (normalize(s) == s) visit(s);
        });
      });
}

std::vector<SkewShape> enumerate_shapes(const ShapeBounds& bounds) {
  std::vector<SkewShape> out;
  for_each_shape(bounds, [&](const SkewShape& s) { out.push_back(s); });
  return out;
}

}  // namespace skewrank
