#pragma once

// Partitions, skew shapes and their cell geometry. Rows grow downward and
// columns rightward (English convention); squares are 1-based.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace skewrank {

/// Weakly decreasing positive parts; trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;
  /// Drops trailing zeros; throws InputError if the parts are not a
  /// partition.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  /// Part i (1-based), 0 past the end.
  int operator[](int i) const {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }
  /// Multiplicity of part value k.
  int multiplicity(int k) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Sorts an arbitrary composition into a partition.
Partition sorted_partition(std::vector<int> parts);

struct Square {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Square&, const Square&) = default;
  friend bool operator==(const Square&, const Square&) = default;
};

/// mu ⊆ lambda. The representation of empty interior rows is fixed by
/// normalize(); see there.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition lambda, Partition mu);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int rows() const { return lambda_.length(); }
  int size() const { return lambda_.size() - mu_.size(); }
  bool empty() const { return size() == 0; }
  bool contains(Square s) const {
    return s.row >= 1 && s.row <= rows() && s.col > mu_[s.row] &&
           s.col <= lambda_[s.row];
  }
  /// Cells in row-major order.
  std::vector<Square> cells() const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
};

/// SHAPE := LAMBDA ("/" MU)?, each side either digits 1-9 (one part per
/// digit) or a comma-separated list of positive integers. A trailing comma
/// forces list form for a single part ("12,").
SkewShape parse_shape(std::string_view text);
std::string format_shape(const SkewShape& s);
std::string format_partition(const Partition& p);

/// Builds the canonical shape whose cell set is a translate of `cells`.
/// Throws InputError if the cells do not form a skew diagram.
SkewShape shape_from_cells(std::vector<Square> cells);

/// Translate so the minimal occupied row and column are 1. Interior empty
/// rows keep their place; an empty row i is stored with
/// lambda_i = mu_i = lambda_{i+1} (the smallest admissible value).
SkewShape normalize(const SkewShape& s);

/// d+ - d-: squares on outside diagonals minus squares on inside diagonals.
int diagonal_rank(const SkewShape& s);

/// (i, j) -> (h - i, k - j), renormalized.
SkewShape rotate180(const SkewShape& s);

/// Edge-connected components, normalized, ordered bottom-left to top-right.
std::vector<SkewShape> connected_components(const SkewShape& s);

struct ShapeBounds {
  int max_rows = 0;
  int max_cols = 0;
  int max_cells = 0;
  bool connected_only = false;
};

/// Every canonical nonempty shape with lambda inside the box and at most
/// max_cells cells (only edge-connected ones if asked), once each, ordered
/// lexicographically by (lambda, mu).
std::vector<SkewShape> enumerate_shapes(const ShapeBounds& bounds);

/// Streaming form of enumerate_shapes (same order).
void for_each_shape(const ShapeBounds& bounds,
                    const std::function<void(const SkewShape&)>& visit);

}  // namespace skewrank
