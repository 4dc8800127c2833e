// Copyright 2026 The UMV Design Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: one subcommand per study plus `validate`.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "umv/cli/config.h"
#include "umv/cli/runner.h"

namespace {

struct Flags {
  std::string config;
  std::string out;
  int workers = 1;
  bool strict = false;
  std::optional<std::int64_t> seed;
  bool emit = false;
};

umv::cli::ExperimentConfig Load(const Flags& f,
                                std::optional<std::string> study) {
  umv::cli::ExperimentConfig c =
      f.config.empty() ? umv::cli::ParseConfig("{}", study)
                       : umv::cli::LoadConfig(f.config, study);
  if (!f.out.empty()) c.output.directory = f.out;
  if (f.seed) c.seed = *f.seed;
  return c;
}

int Execute(const std::string& command, const Flags& f) {
  try {
    if (command == "validate") {
      const auto c = Load(f, std::nullopt);
      if (f.emit) {
        std::cout << umv::cli::EmitConfig(c);
      } else {
        std::cout << "ok " << c.study << " " << umv::cli::ConfigHash(c) << "\n";
      }
      return umv::cli::kExitOk;
    }
    const auto c = Load(f, command);
    umv::cli::RunOptions options;
    options.workers = f.workers;
    options.strict = f.strict;
    options.log = &std::cerr;
    const auto report = umv::cli::Run(c, options);
    for (const auto& file : report.files) {
      std::cout << report.directory << "/" << file << "\n";
    }
    return report.exit_code;
  } catch (const umv::cli::ConfigParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return umv::cli::kExitConfig;
  } catch (const umv::InvalidSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return umv::cli::kExitConfig;
  } catch (const umv::cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return umv::cli::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return umv::cli::kExitCompute;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UMV design studies: jump sweeps and wheelie balance effort"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;

  const std::pair<const char*, const char*> commands[] = {
      {"jump", "optimize and simulate one jump of the configured design"},
      {"sweep-mass", "jump height against link mass"},
      {"sweep-gear", "jump height over the mu and q_h gear ratios"},
      {"sweep-scale", "jump metrics against gross scale"},
      {"balance-psi", "wheelie effort against the phi axis angle"},
      {"balance-dof", "wheelie effort with and without the extra joint"},
      {"validate", "parse and check a config without running it"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    const bool validate = std::string(name) == "validate";
    auto* config = sub->add_option("--config", flags.config, "config file (JSON)");
    if (validate) {
      config->required();
      sub->add_flag("--emit", flags.emit, "print the config with defaults filled");
    } else {
      sub->add_option("--out", flags.out, "output directory");
      sub->add_option("--workers", flags.workers, "worker threads")
          ->check(CLI::Range(1, 1024));
      sub->add_flag("--strict", flags.strict,
                    "exit nonzero when any point failed");
    }
    sub->add_option("--seed", flags.seed, "recorded seed");
    sub->callback([&chosen, name = std::string(name)] { chosen = name; });
  }
  CLI11_PARSE(app, argc, argv);
  return Execute(chosen, flags);
}
