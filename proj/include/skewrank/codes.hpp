#pragma once

// Reduced Comét codes: the lower envelope (c) and upper envelope (d) of a
// skew shape read from its bottom-left point to its top-right point, 1 for a
// horizontal step and 0 for a vertical one. Column m of the code is step m
// of both walks. Columns are 1-based in the public API.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/shapes.hpp"

namespace skewrank {

struct Code {
  std::vector<std::uint8_t> c;
  std::vector<std::uint8_t> d;

  int length() const { return static_cast<int>(c.size()); }
  /// (c_m, d_m) for 1-based m.
  int top(int m) const { return c[static_cast<std::size_t>(m - 1)]; }
  int bottom(int m) const { return d[static_cast<std::size_t>(m - 1)]; }
  bool is_left(int m) const { return top(m) == 1 && bottom(m) == 0; }
  bool is_right(int m) const { return top(m) == 0 && bottom(m) == 1; }

  friend bool operator==(const Code&, const Code&) = default;
};

std::string bits_to_string(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> bits_from_string(const std::string& text);

/// First column at which the prefix condition fails, or length+1 when only
/// the totals disagree; nullopt for a valid pair of rows.
std::optional<int> prefix_violation(const std::vector<std::uint8_t>& c,
                                    const std::vector<std::uint8_t>& d);

Code code_of(const SkewShape& s);

/// Inverse of code_of up to normalization. Throws InputError naming the
/// failing column.
SkewShape shape_of(const Code& code);

/// Shape described by the rows of a code in the frame of the original
/// shape (bottom-left point at the origin, no normalization). Used for
/// intermediate codes during strip removal.
SkewShape frame_shape_of(const Code& code);

int rank_from_code(const Code& code);

/// Square of the shape containing lower-envelope step m (s(c_m)).
Square lower_square(const Code& code, int m);
/// Square of the shape containing upper-envelope step m (s(d_m)).
Square upper_square(const Code& code, int m);

struct StripRemoval {
  int start = 0;  // column with c = 1 before removal
  int end = 0;    // start + size, column with c = 0 before removal
  int size = 0;
  int height = 0;
  Square init;  // bottom-left square of the strip
  Square fin;   // top-right square of the strip
  friend bool operator==(const StripRemoval&, const StripRemoval&) = default;
};

/// Removes the border strip encoded by swapping c_start = 1 and
/// c_{start+size} = 0. Throws InputError on bad indices or if the prefix
/// condition would break.
std::pair<Code, StripRemoval> remove_strip(const Code& code, int start,
                                           int size);

/// Whether remove_strip(code, start, size) would succeed.
bool can_remove_strip(const Code& code, int start, int size);

/// Cells removed by a strip removal from `before` (in the original frame).
std::vector<Square> removed_cells(const Code& before, const Code& after);

/// Repeatedly removes the strip pairing the first remaining (1,0) column
/// with the last (0,1) column whose swap keeps the code valid.
std::vector<StripRemoval> greedy_tableau(const SkewShape& s);

}  // namespace skewrank
