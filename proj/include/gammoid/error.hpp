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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammoid {

enum class ErrorKind {
  kAxiomViolation,
  kGroundSetTooLarge,
  kGraphTooLarge,
  kNotACircuitHyperplane,
  kInvalidGraph,
  kNotStrict,
  kNotInSAndT,
  kNotInGround,
  kNotABasis,
  kRetargetFailed,
  kIsLoop,
  kLabelCollision,
  kPreconditionViolated,
  kVerificationFailed,
  kClaimFailed,
  kParseError,
  kTooLarge,
  kReverifyFailed,
  kUnknownDemo,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::kGraphTooLarge: return "GraphTooLarge";
    case ErrorKind::kNotACircuitHyperplane: return "NotACircuitHyperplane";
    case ErrorKind::kInvalidGraph: return "InvalidGraph";
    case ErrorKind::kNotStrict: return "NotStrict";
    case ErrorKind::kNotInSAndT: return "NotInSAndT";
    case ErrorKind::kNotInGround: return "NotInGround";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kRetargetFailed: return "RetargetFailed";
    case ErrorKind::kIsLoop: return "IsLoop";
    case ErrorKind::kLabelCollision: return "LabelCollision";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kVerificationFailed: return "VerificationFailed";
    case ErrorKind::kClaimFailed: return "ClaimFailed";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kReverifyFailed: return "ReverifyFailed";
    case ErrorKind::kUnknownDemo: return "UnknownDemo";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type; `kind` lets
// callers (the CLI in particular) map failures onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gammoid
