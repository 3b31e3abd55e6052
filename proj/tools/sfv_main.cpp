// Copyright 2026 The sfv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sfv/pipeline.hpp"

namespace {

// exit codes: 0 success, 2 config/usage, 3 I/O, 4 numerical invariant
constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kIoError = 3;
constexpr int kNumericalError = 4;

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  long long seed = -1;
};

sfv::ExperimentConfig load_config(const CommonOpts& opts) {
  sfv::ExperimentConfig cfg;
  if (!opts.config_path.empty())
    cfg = sfv::ExperimentConfig::from_file(opts.config_path);
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "key = value config file");
  cmd->add_option("--seed", opts.seed, "master seed (overrides config)");
  cmd->add_option("--out", opts.out_dir, "output directory");
}

int cmd_vertex(const CommonOpts& opts) {
  auto cfg = load_config(opts);
  sfv::write_vertex_files(cfg);
  std::cout << "wrote vertex tensor, gate and dilated unitary to "
            << cfg.out_dir << "\n";
  return kOk;
}

int cmd_run(const CommonOpts& opts) {
  auto cfg = load_config(opts);
  sfv::RunResult result = sfv::run_experiment(cfg);
  sfv::write_run_files(cfg, result);
  std::cout << sfv::format_report(cfg, result);
  return kOk;
}

int cmd_scan(const CommonOpts& opts, const std::string& setup,
             const std::string& source_name) {
  auto cfg = load_config(opts);
  sfv::ScanSource source;
  if (source_name == "theory")
    source = sfv::ScanSource::kTheory;
  else if (source_name == "reconstructed")
    source = sfv::ScanSource::kReconstructed;
  else
    throw sfv::config_error("--source must be theory or reconstructed");

  std::vector<std::string> setups;
  if (setup == "all") {
    setups = {"all_equal", "vary_one_1", "vary_one_2",
              "vary_one_3", "vary_one_4", "vary_one_5"};
  } else {
    setups = {setup};
  }
  for (const auto& s : setups) {
    auto path = sfv::write_scan_file(cfg, s, source);
    std::cout << "wrote " << path.string() << "\n";
  }
  return kOk;
}

int cmd_report(const CommonOpts& opts) {
  auto cfg = load_config(opts);
  std::filesystem::path path = std::filesystem::path(cfg.out_dir) / "report.txt";
  std::ifstream in(path);
  if (!in) throw sfv::io_error("no report at " + path.string() +
                               "; run the 'run' command first");
  std::string line;
  if (!std::getline(in, line) || line.rfind("schema = sfv-report", 0) != 0)
    throw sfv::io_error("unrecognized report schema in " + path.string());
  std::cout << line << "\n";
  while (std::getline(in, line)) std::cout << line << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulated photonic spinfoam-vertex experiment"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string setup = "all";
  std::string source = "theory";

  CLI::App* vertex = app.add_subcommand(
      "vertex", "write the vertex tensor, gate and dilated unitary");
  add_common(vertex, opts);

  CLI::App* run = app.add_subcommand(
      "run", "simulate the full experiment and reconstruct the gate");
  add_common(run, opts);

  CLI::App* scan =
      app.add_subcommand("scan", "write amplitude grids for contour plots");
  add_common(scan, opts);
  scan->add_option("--setup", setup,
                   "all_equal, vary_one_1..vary_one_5, or all");
  scan->add_option("--source", source, "theory or reconstructed");

  CLI::App* report = app.add_subcommand("report", "print a stored run report");
  add_common(report, opts);

  try {
    app.parse(argc, argv);
    if (vertex->parsed()) return cmd_vertex(opts);
    if (run->parsed()) return cmd_run(opts);
    if (scan->parsed()) return cmd_scan(opts, setup, source);
    if (report->parsed()) return cmd_report(opts);
    return kConfigError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  } catch (const sfv::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const sfv::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const sfv::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
