#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "skewrank/cli.hpp"
#include "skewrank/scan.hpp"

using namespace skewrank;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze") {
  auto r = call({"analyze", "8874/411", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 4);
  CHECK(j["ranks"]["diagonal"] == 4);
  CHECK(j["ranks"]["strips"] == 4);
  CHECK(j["ranks"]["jrank"] == 4);
  CHECK(j["ranks"]["code"] == 4);
  CHECK(j["snake_sequence"] == "L0 O L1 L2 R2 O O L2 R2 O R1 R0");
  CHECK(j["pairing"] == nlohmann::json::parse("[[1,12],[3,11],[4,5],[8,9]]"));
  CHECK(j["code"] == nlohmann::json::parse(R"(["111101110100","010011101111"])"));
  CHECK(j["z"] == 5);
  CHECK(j["is"] == 18);

  auto text = call({"analyze", "8874/411"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("L0 O L1 L2 R2 O O L2 R2 O R1 R0") != std::string::npos);
}

TEST_CASE("queries") {
  CHECK(call({"shat", "332/1"}).out ==
        "1/5 p1^2 p5 - 1/4 p1 p2 p4 + 1/12 p2^2 p3\n");
  for (const char* m : {"direct", "intervals", "pfaffian"})
    CHECK(call({"shat", "332/1", "--method", m}).out ==
          "1/5 p1^2 p5 - 1/4 p1 p2 p4 + 1/12 p2^2 p3\n");
  CHECK(call({"expand", "332/1"}).out ==
        "1/120 p1^7 - 1/12 p1^4 p3 + 1/24 p1^3 p2^2 + 1/5 p1^2 p5 - 1/4 p1 p2 "
        "p4 + 1/12 p2^2 p3\n");
  auto chi = call({"character", "332/1", "--type", "421", "--json"});
  CHECK(chi.code == kExitOk);
  CHECK(nlohmann::json::parse(chi.out)["chi"] == -2);

  auto dec = call({"decompose", "332/1", "--minimal", "--count-only", "--json"});
  REQUIRE(dec.code == kExitOk);
  auto dj = nlohmann::json::parse(dec.out);
  CHECK(dj["minimal"] == 16);
  CHECK(dj["minimal_tableaux"] == 24);

  auto latin = call({"latin", "332/1", "--json"});
  REQUIRE(latin.code == kExitOk);
  CHECK(nlohmann::json::parse(latin.out)["indices"] ==
        nlohmann::json::parse("[[1,2,3,4],[2,1,4,3],[3,4,1,2],[4,3,2,1]]"));

  auto zr = call({"zrank", "332/1", "--json"});
  REQUIRE(zr.code == kExitOk);
  CHECK(nlohmann::json::parse(zr.out)["zrank"] == 3);

  auto code = call({"code", "332/1"});
  CHECK(code.out.find("110100") != std::string::npos);
  auto decoded = call({"code", "--decode", "110100/001011"});
  CHECK(decoded.code == kExitOk);
  CHECK(decoded.out.find("332/1") != std::string::npos);

  CHECK(call({"snakes", "443/2"}).out.find("L0 L1 O R1 L1 R1 R0") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"analyze"}).code == kExitUsage);
  auto bad = call({"analyze", "2/3"});
  CHECK(bad.code == kExitUsage);
  CHECK_FALSE(bad.err.empty());
  CHECK(call({"code", "--decode", "01/10"}).code == kExitUsage);
  CHECK(call({"character", "332/1", "--type", "33"}).code == kExitUsage);
  CHECK(call({"shat", "332/1", "--method", "guess"}).code == kExitUsage);
  CHECK(call({"scan", "--shard", "2/2"}).code == kExitUsage);
  CHECK(call({"scan", "--workers", "0"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("scan") {
  auto one = call({"scan", "--max-rows", "1", "--max-cols", "1", "--max-cells",
                   "1", "--workers", "1"});
  REQUIRE(one.code == kExitOk);
  auto summary = nlohmann::json::parse(lines(one.out).back());
  CHECK(summary["type"] == "summary");
  CHECK(summary["scanned"] == 1);
  CHECK(summary["counterexamples"] == 0);

  auto box = call({"scan", "--max-rows", "4", "--max-cols", "4", "--max-cells",
                   "10", "--workers", "2"});
  REQUIRE(box.code == kExitOk);
  CHECK(nlohmann::json::parse(lines(box.out).back())["counterexamples"] == 0);
}

TEST_CASE("scan output does not depend on workers or shards") {
  auto scan = [](int index, int count, int workers) {
    ScanConfig cfg;
    cfg.bounds = {4, 4, 9};
    cfg.shard_index = index;
    cfg.shard_count = count;
    cfg.workers = workers;
    cfg.emit_all = true;
    std::ostringstream out;
    run_scan(cfg, out);
    return lines(out.str());
  };
  const auto whole = scan(0, 1, 1);
  CHECK(scan(0, 1, 4) == whole);

  std::vector<std::string> merged;
  long scanned = 0;
  for (int k = 0; k < 3; ++k) {
    auto part = scan(k, 3, 2);
    scanned += nlohmann::json::parse(part.back())["scanned"].get<long>();
    merged.insert(merged.end(), part.begin(), part.end() - 1);
  }
  std::vector<std::string> records(whole.begin(), whole.end() - 1);
  std::sort(merged.begin(), merged.end());
  std::sort(records.begin(), records.end());
  CHECK(merged == records);
  CHECK(scanned == nlohmann::json::parse(whole.back())["scanned"].get<long>());
}

}
