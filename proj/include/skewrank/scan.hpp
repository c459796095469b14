#pragma once

// Exhaustive rank-versus-zrank scan over canonical shapes in a box.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "skewrank/report.hpp"
#include "skewrank/shapes.hpp"

namespace skewrank {

struct ScanConfig {
  ShapeBounds bounds;
  int shard_index = 0;
  int shard_count = 1;
  int workers = 1;
  bool emit_all = false;  // one record per scanned shape, not only hits
};

/// Throws InputError on a malformed config.
void validate(const ScanConfig& cfg);

struct ScanSummary {
  long scanned = 0;
  long counterexamples = 0;
  long straight_confirmed = 0;  // mu empty, s(1^t) equals the hook-content product
  std::map<int, long> by_size;  // cells -> shapes scanned
  std::vector<ShapeReport> hits;
  double elapsed_seconds = 0;
};

/// Shard k of n takes the shapes whose enumeration index is k mod n.
/// Writes JSON lines to `out` in enumeration order: per-shape records when
/// emit_all, one record per counterexample, then a summary record. Elapsed
/// time is returned but not written, so the output is byte-stable.
ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out);

}  // namespace skewrank
