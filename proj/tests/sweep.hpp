#pragma once

#include <set>
#include <vector>

#include "skewrank/shapes.hpp"

namespace sweep {

// "Every shape with at most n cells": every connected one (any such shape
// fits an n x n box) plus every shape, disconnected included, of a 5 x 5
// box. Disconnected shapes are unbounded in extent, so they are sampled by
// the box.
inline std::vector<skewrank::SkewShape> shapes_up_to(int n) {
  std::set<skewrank::SkewShape> out;
  skewrank::for_each_shape({n, n, n, true},
                           [&](const skewrank::SkewShape& s) { out.insert(s); });
  skewrank::for_each_shape({5, 5, n, false},
                           [&](const skewrank::SkewShape& s) { out.insert(s); });
  return {out.begin(), out.end()};
}

inline std::vector<skewrank::SkewShape> box(int rows, int cols, int cells) {
  return skewrank::enumerate_shapes({rows, cols, cells, false});
}

}  // namespace sweep
