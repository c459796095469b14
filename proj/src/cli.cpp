#include "skewrank/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "skewrank/characters.hpp"
#include "skewrank/decomp.hpp"
#include "skewrank/error.hpp"
#include "skewrank/report.hpp"
#include "skewrank/scan.hpp"
#include "skewrank/specialization.hpp"

namespace skewrank {

namespace {

// Decompositions listed before `decompose` insists on --count-only.
constexpr long kListLimit = 100000;

std::vector<int> parse_composition(const std::string& text) {
  std::vector<int> parts;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw InputError("type '" + text + "': use digits 1-9 or a comma list");
      parts.push_back(ch - '0');
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() ||
          item.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("type '" + text + "' is not a list of integers");
      parts.push_back(std::stoi(item));
    }
  }
  if (parts.empty()) throw InputError("empty character type");
  return parts;
}

std::string kind_name(SnakeKind k) {
  switch (k) {
    case SnakeKind::Left:
      return "left";
    case SnakeKind::Right:
      return "right";
    case SnakeKind::Odd:
      return "odd";
    case SnakeKind::Empty:
      return "empty";
  }
  return "?";
}

std::string format_squares(const std::vector<Square>& squares) {
  std::string out;
  for (const auto& sq : squares) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
  }
  return out;
}

std::string format_decomposition(const Decomposition& d) {
  std::string out;
  for (const auto& b : d.strips()) {
    if (!out.empty()) out += " ";
    out += "{" + format_squares(b.squares) + "}";
  }
  return out;
}

Code parse_code(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw InputError("code must be written C/D, e.g. 110100/001011");
  Code code{bits_from_string(text.substr(0, slash)),
            bits_from_string(text.substr(slash + 1))};
  if (code.c.size() != code.d.size())
    throw InputError("code rows have different lengths");
  return code;
}

struct Shared {
  std::string shape;
  bool json = false;
};

void add_shape(CLI::App* cmd, Shared& s) {
  cmd->add_option("shape", s.shape, "skew shape, e.g. 8874/411 or 12,3/1")
      ->required();
  cmd->add_flag("--json", s.json, "machine-readable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rank, codes, snakes and border strip decompositions of skew "
               "shapes"};
  app.name("skewrank");
  app.require_subcommand(1);

  Shared opt;
  bool minimal = false, count_only = false, emit_all = false;
  std::string type_text, method = "all", decode, shard = "0/1", output;
  ScanConfig scan_cfg;
  scan_cfg.bounds = {4, 4, 10};
  scan_cfg.workers =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* analyze = app.add_subcommand("analyze", "full report for one shape");
  add_shape(analyze, opt);
  auto* code = app.add_subcommand("code", "reduced code of a shape");
  code->add_option("shape", opt.shape, "skew shape");
  code->add_option("--decode", decode, "read a code C/D and print its shape");
  code->add_flag("--json", opt.json, "machine-readable output");
  auto* snakes = app.add_subcommand("snakes", "snakes and the snake sequence");
  add_shape(snakes, opt);
  auto* decompose =
      app.add_subcommand("decompose", "border strip decompositions");
  add_shape(decompose, opt);
  decompose->add_flag("--minimal", minimal, "only minimal decompositions");
  decompose->add_flag("--count-only", count_only, "only the counts");
  auto* character = app.add_subcommand("character", "skew character value");
  add_shape(character, opt);
  character->add_option("--type", type_text, "cycle type, e.g. 511 or 5,1,1")
      ->required();
  auto* expand = app.add_subcommand("expand", "power-sum expansion");
  add_shape(expand, opt);
  auto* shat = app.add_subcommand("shat", "lowest-degree power-sum part");
  add_shape(shat, opt);
  shat->add_option("--method", method, "direct, intervals, pfaffian or all")
      ->check(CLI::IsMember({"direct", "intervals", "pfaffian", "all"}));
  auto* zr = app.add_subcommand("zrank", "principal specialization and zrank");
  add_shape(zr, opt);
  auto* latin = app.add_subcommand("latin", "Latin square of interval sets");
  add_shape(latin, opt);
  auto* scan = app.add_subcommand("scan", "exhaustive rank = zrank scan");
  scan->add_option("--max-rows", scan_cfg.bounds.max_rows)
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--max-cols", scan_cfg.bounds.max_cols)
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--max-cells", scan_cfg.bounds.max_cells)
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--shard", shard, "K/N: the K-th of N shards, from 0");
  scan->add_option("--workers", scan_cfg.workers)->check(CLI::PositiveNumber);
  scan->add_option("--output", output, "JSON-lines file (default stdout)");
  scan->add_flag("--all", emit_all, "one record per shape");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (code->parsed() && !decode.empty()) {
      const SkewShape s = shape_of(parse_code(decode));
      if (opt.json)
        out << nlohmann::json{{"shape", format_shape(s)}}.dump(2) << "\n";
      else
        out << format_shape(s) << "\n";
      return kExitOk;
    }
    if (code->parsed() && opt.shape.empty())
      throw InputError("code needs a shape or --decode C/D");

    if (scan->parsed()) {
      const auto slash = shard.find('/');
      if (slash == std::string::npos)
        throw InputError("--shard must be K/N");
      try {
        scan_cfg.shard_index = std::stoi(shard.substr(0, slash));
        scan_cfg.shard_count = std::stoi(shard.substr(slash + 1));
      } catch (const std::logic_error&) {
        throw InputError("--shard must be K/N");
      }
      scan_cfg.emit_all = emit_all;
      validate(scan_cfg);
      ScanSummary summary;
      if (output.empty()) {
        summary = run_scan(scan_cfg, out);
      } else {
        std::ofstream file(output);
        if (!file) throw std::runtime_error("cannot open " + output);
        summary = run_scan(scan_cfg, file);
        if (!file) throw std::runtime_error("write failed for " + output);
      }
      err << "scanned " << summary.scanned << " shapes, counterexamples: "
          << summary.counterexamples << ", straight shapes confirmed: "
          << summary.straight_confirmed << ", elapsed " << std::fixed
          << std::setprecision(2) << summary.elapsed_seconds << " s\n";
      return summary.counterexamples ? kExitCounterexample : kExitOk;
    }

    const SkewShape s = normalize(parse_shape(opt.shape));
    const std::string name = format_shape(s);

    if (analyze->parsed()) {
      const ShapeReport r = make_report(s);
      if (opt.json)
        out << to_json(r).dump(2) << "\n";
      else
        out << format_report(r);
    } else if (code->parsed()) {
      const Code c = code_of(s);
      if (opt.json)
        out << nlohmann::json{{"shape", name},
                              {"c", bits_to_string(c.c)},
                              {"d", bits_to_string(c.d)}}
                   .dump(2)
            << "\n";
      else
        out << bits_to_string(c.c) << "\n" << bits_to_string(c.d) << "\n";
    } else if (snakes->parsed()) {
      const auto list = snakes_of(s);
      const SnakeSequence ss = snake_sequence(s);
      if (opt.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sn : list) {
          nlohmann::json squares = nlohmann::json::array();
          for (const auto& sq : sn.squares) squares.push_back({sq.row, sq.col});
          arr.push_back({{"index", sn.index},
                         {"kind", kind_name(sn.kind)},
                         {"length", sn.length},
                         {"squares", squares}});
        }
        out << nlohmann::json{{"shape", name},
                              {"snakes", arr},
                              {"snake_sequence", to_string(ss)}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& sn : list)
          out << "S" << sn.index << " " << kind_name(sn.kind) << " length "
              << sn.length << " " << format_squares(sn.squares) << "\n";
        out << "SS " << to_string(ss) << "\n";
      }
    } else if (decompose->parsed()) {
      const CountingReport counts = counting_report(s);
      if (count_only) {
        if (opt.json) {
          nlohmann::json types = nlohmann::json::array();
          for (const auto& [t, n] : counts.by_type)
            types.push_back({{"type", to_json(t)}, {"count", to_json(n)}});
          out << nlohmann::json{{"shape", name},
                                {"total", to_json(counts.total)},
                                {"minimal", to_json(counts.mbsd)},
                                {"minimal_tableaux", to_json(counts.mbst)},
                                {"is", to_json(counts.is)},
                                {"minimal_by_type", types}}
                     .dump(2)
              << "\n";
        } else {
          out << "decompositions " << counts.total << "\n";
          out << "minimal        " << counts.mbsd << "\n";
          out << "min tableaux   " << counts.mbst << "\n";
          out << "is             " << counts.is << "\n";
          for (auto it = counts.by_type.rbegin(); it != counts.by_type.rend();
               ++it)
            out << "type " << format_partition(it->first) << "  " << it->second
                << "\n";
        }
      } else {
        const BigInt n = minimal ? counts.mbsd : counts.total;
        if (n > kListLimit)
          throw InputError(n.str() + " decompositions; use --count-only");
        const auto list = minimal ? minimal_decompositions(s)
                                  : all_decompositions(s);
        if (opt.json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& d : list) arr.push_back(to_json(d));
          out << arr.dump() << "\n";
        } else {
          for (const auto& d : list) out << format_decomposition(d) << "\n";
        }
      }
    } else if (character->parsed()) {
      const BigInt chi = mn_character(s, parse_composition(type_text));
      if (opt.json)
        out << nlohmann::json{{"shape", name},
                              {"type", parse_composition(type_text)},
                              {"chi", to_json(chi)}}
                   .dump(2)
            << "\n";
      else
        out << chi << "\n";
    } else if (expand->parsed()) {
      const PowerSumPolynomial p = power_sum_expansion(s);
      if (opt.json)
        out << to_json(p).dump(2) << "\n";
      else
        out << to_string(p) << "\n";
    } else if (shat->parsed()) {
      PowerSumPolynomial result;
      if (method == "all") {
        result = s_hat(s, ShatMethod::Intervals);
        ensure(result == s_hat(s, ShatMethod::Pfaffian),
               "s_hat: Pfaffian differs from the interval-set sum");
        if (s.size() <= expansion_budget())
          ensure(result == s_hat(s, ShatMethod::Direct),
                 "s_hat: character sum differs from the interval-set sum");
        else
          err << "direct method skipped: over the expansion budget\n";
      } else {
        const ShatMethod m = method == "direct"      ? ShatMethod::Direct
                             : method == "pfaffian" ? ShatMethod::Pfaffian
                                                    : ShatMethod::Intervals;
        result = s_hat(s, m);
      }
      if (opt.json)
        out << to_json(result).dump(2) << "\n";
      else
        out << to_string(result) << "\n";
    } else if (zr->parsed()) {
      const RationalPolynomial p = principal_specialization(s);
      const int z = zrank(s);
      const int r = rank_from_code(code_of(s));
      if (opt.json)
        out << nlohmann::json{{"shape", name},
                              {"zrank", z},
                              {"rank", r},
                              {"specialization", to_json(p)}}
                   .dump(2)
            << "\n";
      else
        out << "zrank  " << z << "\nrank   " << r << "\ns(1^t) "
            << to_string(p) << "\n";
    } else if (latin->parsed()) {
      const LatinSquare sq = latin_square(s);
      if (opt.json) {
        out << to_json(sq).dump(2) << "\n";
      } else {
        for (const auto& row : sq.indices) {
          for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
          out << "\n";
        }
        for (std::size_t i = 0; i < sq.legend.size(); ++i)
          out << "I" << i + 1 << " = " << to_string(sq.legend[i]) << "\n";
      }
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace skewrank
