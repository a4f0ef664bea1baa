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

#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "gammoid/certificate.hpp"
#include "gammoid/certificate_io.hpp"
#include "gammoid/construction.hpp"
#include "gammoid/corpus.hpp"
#include "gammoid/error.hpp"
#include "gammoid/linkage.hpp"
#include "gammoid/verify.hpp"

// Command implementations behind tools/gammoid_cli. They take streams so the
// tests can drive them in-process; "-" paths mean stdin/stdout.
namespace gammoid::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kTooLarge = 3,
  kClaimFailed = 4,
  kReverifyFailed = 5,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kInvalidGraph:
      return kParse;
    case ErrorKind::kTooLarge:
    case ErrorKind::kGroundSetTooLarge:
      return kTooLarge;
    case ErrorKind::kReverifyFailed:
      return kReverifyFailed;
    case ErrorKind::kUnknownDemo:
      return kUsage;
    default:
      return kClaimFailed;
  }
}

struct BuildOptions {
  BranchChoice branch = BranchChoice::kBoth;
  int jobs = 1;
  int max_elements = kMaxGroundSize;
};

inline std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

inline void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParseError, "cannot write '" + path + "'");
  out << text;
}

// One line per claim, then the Ingleton witness and the minor count.
inline void print_report(const Certificate& c, std::ostream& report) {
  for (const auto& claim : c.claims) {
    report << std::left << std::setw(10) << claim.name
           << (claim.name == "mohawk" ? "VIOLATED " + std::to_string(c.ingleton.lhs) +
                                            ">" + std::to_string(c.ingleton.rhs)
                                      : std::string(claim.ok ? "OK" : "FAILED"))
           << "  " << claim.detail << "\n";
  }
  std::size_t verified = 0;
  for (const auto& rec : c.minors) {
    verified += rec.deletion_verified ? 1 : 0;
    verified += rec.contraction_verified ? 1 : 0;
  }
  report << "M         " << c.m.ground.size() << " elements, rank " << c.r + 3
         << ", " << c.m.bases.size() << " bases\n";
  report << "minors    " << verified << "/" << 2 * c.minors.size()
         << " presentations verified\n";
  report << "certificate " << (c.complete() ? "COMPLETE" : "INCOMPLETE") << "\n";
}

inline Certificate build_certificate(const Presentation& input,
                                     const BuildOptions& options) {
  const ConstructionBundle bundle =
      build_construction(input, options.branch, options.max_elements);
  return certify_excluded_minor(bundle, {options.branch, options.jobs});
}

inline int cmd_build(const std::string& input_path,
                     const std::string& output_path,
                     const BuildOptions& options, std::ostream& report) {
  try {
    const Presentation input = parse_input_document(read_all(input_path));
    const Certificate cert = build_certificate(input, options);
    write_all(output_path, serialize(cert));
    print_report(cert, report);
    return cert.complete() ? kOk : kClaimFailed;
  } catch (const Error& e) {
    report << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

inline int verify_text(const std::string& text, std::ostream& report) {
  try {
    reverify(parse_certificate(text));
    report << "certificate verified\n";
    return kOk;
  } catch (const Error& e) {
    report << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kParseError ? kParse : kReverifyFailed;
  }
}

inline int cmd_verify(const std::string& certificate_path, std::ostream& report) {
  std::string text;
  try {
    text = read_all(certificate_path);
  } catch (const Error& e) {
    report << "error: " << e.what() << "\n";
    return kParse;
  }
  return verify_text(text, report);
}

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"u24", "rank3-gammoid",
                                                 "strict-gammoid-duality"};
  return names;
}

inline int cmd_demo(const std::string& name, std::ostream& out,
                    std::ostream& report, int jobs = 1) {
  try {
    if (name == "strict-gammoid-duality") {
      std::mt19937 rng(20260);
      int passed = 0;
      for (int k = 0; k < 100; ++k) {
        if (transversal_duality_check(
                corpus::random_presentation(rng, 6, 0.3, true))) {
          ++passed;
        }
      }
      out << passed << "/100 random strict presentations: dual of the "
          << "transversal matroid equals the strict gammoid\n";
      return passed == 100 ? kOk : kClaimFailed;
    }
    Presentation input;
    if (name == "u24") {
      input = corpus::u24();
    } else if (name == "rank3-gammoid") {
      input = corpus::rank3_gammoid();
    } else {
      throw Error(ErrorKind::kUnknownDemo,
                  "'" + name + "' (known: u24, rank3-gammoid, "
                               "strict-gammoid-duality)");
    }
    BuildOptions options;
    options.jobs = jobs;
    const Certificate cert = build_certificate(input, options);
    print_report(cert, out);
    return cert.complete() ? kOk : kClaimFailed;
  } catch (const Error& e) {
    report << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace gammoid::cli
