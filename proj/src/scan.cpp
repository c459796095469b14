#include "skewrank/scan.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "skewrank/error.hpp"
#include "skewrank/specialization.hpp"

namespace skewrank {

void validate(const ScanConfig& cfg) {
  if (cfg.bounds.max_rows < 0 || cfg.bounds.max_cols < 0 ||
      cfg.bounds.max_cells < 0)
    throw InputError("scan bounds must be nonnegative");
  if (cfg.shard_count < 1 || cfg.shard_index < 0 ||
      cfg.shard_index >= cfg.shard_count)
    throw InputError("shard index must lie in [0, shard count)");
  if (cfg.workers < 1) throw InputError("workers must be at least 1");
}

namespace {

struct Row {
  RankCheck rank;
  int zrank = 0;
  bool straight = false;
  std::string error;
};

Row scan_one(const SkewShape& s) {
  Row row;
  row.rank = rank_check(s);
  if (!row.rank.agree())
    throw InvariantError("rank characterizations differ for " +
                         format_shape(s));
  const RationalPolynomial poly = principal_specialization(s);
  row.zrank = s.empty() ? 0 : poly.valuation();
  if (s.mu().empty()) {
    ensure(poly == hook_content_polynomial(s.lambda()),
           "hook-content product differs from s(1^t) for " + format_shape(s));
    row.straight = true;
  }
  return row;
}

}  // namespace

ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  std::vector<SkewShape> shapes;
  long index = 0;
  for_each_shape(cfg.bounds, [&](const SkewShape& s) {
    if (index++ % cfg.shard_count == cfg.shard_index) shapes.push_back(s);
  });

  std::vector<Row> rows(shapes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      try {
        rows[i] = scan_one(shapes[i]);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < cfg.workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ScanSummary summary;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const SkewShape& s = shapes[i];
    const Row& row = rows[i];
    if (!row.error.empty())
      throw InvariantError("scan aborted at " + format_shape(s) + ": " +
                           row.error);
    ++summary.scanned;
    ++summary.by_size[s.size()];
    if (row.straight) ++summary.straight_confirmed;
    const bool hit = row.zrank != row.rank.code;
    if (cfg.emit_all)
      out << nlohmann::json{{"type", "shape"},
                            {"shape", format_shape(s)},
                            {"cells", s.size()},
                            {"rank", row.rank.code},
                            {"zrank", row.zrank}}
                 .dump()
          << "\n";
    if (hit) {
      ++summary.counterexamples;
      nlohmann::json record = {{"type", "counterexample"},
                               {"shape", format_shape(s)},
                               {"rank", row.rank.code},
                               {"zrank", row.zrank}};
      try {
        ShapeReport report = make_report(s);
        record["report"] = to_json(report);
        summary.hits.push_back(std::move(report));
      } catch (const std::exception& e) {
        record["report_error"] = e.what();
      }
      out << record.dump() << "\n";
    }
  }

  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [cells, count] : summary.by_size)
    histogram[std::to_string(cells)] = count;
  out << nlohmann::json{{"type", "summary"},
                        {"max_rows", cfg.bounds.max_rows},
                        {"max_cols", cfg.bounds.max_cols},
                        {"max_cells", cfg.bounds.max_cells},
                        {"shard", {cfg.shard_index, cfg.shard_count}},
                        {"scanned", summary.scanned},
                        {"counterexamples", summary.counterexamples},
                        {"straight_confirmed", summary.straight_confirmed},
                        {"by_size", histogram}}
             .dump()
      << "\n";
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

}  // namespace skewrank
