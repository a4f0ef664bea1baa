// Copyright 2026 The Authors.
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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "gammoid/cli.hpp"

int main(int argc, char** argv) {
  using namespace gammoid;
  CLI::App app{"Builds and checks excluded-minor certificates for gammoids"};
  app.require_subcommand(1);

  std::string input = "-", output = "-";
  cli::BuildOptions options;
  std::string branch = "both";
  auto* build = app.add_subcommand(
      "build", "Run the construction on a presentation and write a certificate");
  build->add_option("-i,--input", input, "Input presentation (JSON, - for stdin)");
  build->add_option("-o,--output", output, "Certificate path (- for stdout)");
  build->add_option("--branch", branch, "Branch driving per-branch checks")
      ->check(CLI::IsMember({"1", "2", "both"}));
  build->add_option("--jobs", options.jobs, "Workers for minor certification")
      ->check(CLI::PositiveNumber);
  build->add_option("--max-elements", options.max_elements,
                    "Largest allowed ground set of M")
      ->check(CLI::Range(11, kMaxGroundSize));

  std::string certificate = "-";
  auto* verify = app.add_subcommand(
      "verify", "Re-check every claim recorded in a certificate");
  verify->add_option("certificate", certificate, "Certificate path (- for stdin)");
  verify->add_option("-i,--input", certificate, "Certificate path (- for stdin)");

  std::string demo_name;
  int demo_jobs = 1;
  auto* demo = app.add_subcommand("demo", "Run a built-in scenario");
  demo->add_option("name", demo_name, "u24 | rank3-gammoid | strict-gammoid-duality")
      ->required();
  demo->add_option("--jobs", demo_jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kUsage;
  }

  if (*build) {
    static const std::map<std::string, BranchChoice> branches = {
        {"1", BranchChoice::kFirst},
        {"2", BranchChoice::kSecond},
        {"both", BranchChoice::kBoth}};
    options.branch = branches.at(branch);
    return cli::cmd_build(input, output, options, std::cerr);
  }
  if (*verify) return cli::cmd_verify(certificate, std::cerr);
  return cli::cmd_demo(demo_name, std::cout, std::cerr, demo_jobs);
}
