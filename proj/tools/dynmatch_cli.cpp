// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

// dynmatch: replay, generate, bench and verify update streams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "harness/harness.hpp"

namespace {

std::vector<dm_engine_kind> parse_engines(const std::vector<std::string>& names) {
  std::vector<dm_engine_kind> out;
  for (const auto& spec : names) {
    std::stringstream parts(spec);
    for (std::string name; std::getline(parts, name, ',');) {
      dm_engine_kind kind;
      if (dm_engine_kind_parse(name.c_str(), &kind) != DM_OK)
        throw CLI::ValidationError("--engine", dm_last_error());
      out.push_back(kind);
    }
  }
  return out;
}

dmh::StreamFile load(const std::string& path) {
  if (path == "-") return dmh::parse_stream(std::cin);
  return dmh::read_stream(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic maximal matching: stream replay and benchmarks"};
  app.require_subcommand(1);

  dm_config config = dmh::default_config();
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--arboricity", config.arboricity, "Arboricity bound c for the arb engine")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--delta", config.delta, "Out-degree cap for the arb engine (0 = 5c)");
  };

  std::vector<std::string> engine_names{"sqrt"};
  std::size_t check_every = 0;
  std::string input;
  std::string csv_path;
  std::optional<std::size_t> fault;

  auto* replay = app.add_subcommand("replay", "Replay a stream with oracle checks");
  replay->add_option("file", input, "Stream file, '-' for standard input")->required();
  replay->add_option("--engine", engine_names,
                     "naive|sqrt|arb|compact; several run in lockstep");
  replay->add_option("--check-every", check_every, "Check every K updates (default 1 if n<=64, else 32)");
  replay->add_option("--inject-fault", fault, "Drop a matched edge after update K (testing)");
  add_config(replay);

  std::string kind_name = "random";
  std::uint32_t n = 16;
  std::size_t length = 0;
  std::uint64_t seed = 1;
  std::size_t target_m = 0;
  std::string out_path = "-";
  auto* generate = app.add_subcommand("generate", "Write a generated stream");
  generate->add_option("--kind", kind_name, "random|star-adversary|forest|delete-heavy");
  generate->add_option("--n", n, "Vertex count")->check(CLI::PositiveNumber);
  generate->add_option("--len", length, "Number of updates (default 10n)");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--target-m", target_m, "Random kind: edge count to hover around");
  generate->add_option("--out", out_path, "Output file, '-' for standard output");

  std::vector<std::string> bench_engines{"naive", "sqrt", "arb", "compact"};
  bool serial = false;
  auto* bench = app.add_subcommand("bench", "Time engines on one stream, CSV output");
  bench->add_option("file", input, "Stream file, '-' for standard input")->required();
  bench->add_option("--engine", bench_engines, "Engines to run (default: all)");
  bench->add_option("--csv", csv_path, "Write CSV here instead of standard output");
  bench->add_flag("--serial", serial, "Run engines one after another");
  add_config(bench);

  auto* verify = app.add_subcommand("verify", "Oracle-only pass with the naive engine");
  verify->add_option("file", input, "Stream file, '-' for standard input")->required();
  verify->add_option("--check-every", check_every, "Check every K updates");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      const auto kind = dmh::parse_kind(kind_name);
      if (!kind) {
        std::cerr << "unknown stream kind '" << kind_name << "'\n";
        return dmh::kExitUsage;
      }
      dmh::GenerateOptions g;
      g.kind = *kind;
      g.n = n;
      g.length = length ? length : static_cast<std::size_t>(10) * n;
      if (generate->count("--len") && length == 0) g.length = 0;
      g.seed = seed;
      g.target_m = target_m;
      const auto stream = dmh::generate(g);
      if (out_path == "-") {
        dmh::write_stream(std::cout, stream);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write '" << out_path << "'\n";
          return dmh::kExitUsage;
        }
        dmh::write_stream(out, stream);
      }
      return dmh::kExitOk;
    }

    const auto stream = load(input);

    if (*bench) {
      const auto rows = dmh::bench(stream, parse_engines(bench_engines), config, !serial);
      int code = dmh::kExitOk;
      for (const auto& r : rows)
        if (r.error) {
          std::cerr << r.engine << ": " << *r.error << '\n';
          code = dmh::kExitInternal;
        }
      if (csv_path.empty()) {
        dmh::write_bench_csv(std::cout, rows);
      } else {
        std::ofstream out(csv_path);
        dmh::write_bench_csv(out, rows);
      }
      return code;
    }

    std::vector<dmh::RunReport> reports;
    if (*verify) {
      dmh::ReplayOptions o;
      o.engine = DM_ENGINE_NAIVE;
      o.check_every = check_every;
      reports.push_back(dmh::replay(stream, o));
    } else {
      const auto engines = parse_engines(engine_names);
      if (engines.size() == 1) {
        dmh::ReplayOptions o;
        o.engine = engines.front();
        o.config = config;
        o.check_every = check_every;
        o.inject_fault_after = fault;
        reports.push_back(dmh::replay(stream, o));
      } else {
        reports = dmh::replay_lockstep(stream, engines, config, check_every);
      }
    }
    int code = dmh::kExitOk;
    for (const auto& r : reports) {
      dmh::write_report(std::cout, r);
      for (const auto& v : r.violations) std::cerr << r.engine << ": " << v << '\n';
      if (r.error) std::cerr << r.engine << ": " << *r.error << '\n';
      code = std::max(code, dmh::exit_code_for(r));
    }
    return code;
  } catch (const dmh::ParseError& e) {
    std::cerr << input << ":" << e.what() << '\n';
    return dmh::kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return dmh::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dmh::kExitInternal;
  }
}
