// Copyright 2023 The Authors.
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

#ifndef TRANSIT_ERRORS_H_
#define TRANSIT_ERRORS_H_

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace transit {

// Process exit codes. 1 is reserved for a failed bound assertion.
enum ExitCode : int {
  kExitOk = 0,
  kExitAssertionFailed = 1,
  kExitParseError = 2,
  kExitEmptySolutionSet = 3,
  kExitUndefinedPrice = 4,
  kExitNotATransition = 5,
  kExitWrongArity = 6,
  kExitPreconditionFailed = 7,
  kExitCertificateInvalid = 8,
  kExitNotIdenticalUtility = 9,
  kExitNotTwoColour = 10,
  kExitTopologyMismatch = 11,
  kExitBadParams = 12,
  kExitInvalidInput = 13,
  kExitInfeasible = 14,
  kExitTooLarge = 15,
  kExitNoConvergence = 16,
};

class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& message, int exit_code)
      : std::runtime_error(message), kind_(kind), exit_code_(exit_code) {}
  const char* kind() const { return kind_; }
  int exit_code() const { return exit_code_; }

 private:
  const char* kind_;
  int exit_code_;
};

#define TRANSIT_DEFINE_ERROR(Name, code)                                \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message)                           \
        : Error(#Name, message, code) {}                                \
  }

TRANSIT_DEFINE_ERROR(ParseError, kExitParseError);
TRANSIT_DEFINE_ERROR(EmptySolutionSet, kExitEmptySolutionSet);
TRANSIT_DEFINE_ERROR(UndefinedPrice, kExitUndefinedPrice);
TRANSIT_DEFINE_ERROR(NotATransition, kExitNotATransition);
TRANSIT_DEFINE_ERROR(WrongArity, kExitWrongArity);
TRANSIT_DEFINE_ERROR(PreconditionFailed, kExitPreconditionFailed);
TRANSIT_DEFINE_ERROR(CertificateInvalid, kExitCertificateInvalid);
TRANSIT_DEFINE_ERROR(NotIdenticalUtility, kExitNotIdenticalUtility);
TRANSIT_DEFINE_ERROR(NotTwoColour, kExitNotTwoColour);
TRANSIT_DEFINE_ERROR(TopologyMismatch, kExitTopologyMismatch);
TRANSIT_DEFINE_ERROR(BadParams, kExitBadParams);
TRANSIT_DEFINE_ERROR(InvalidInput, kExitInvalidInput);
TRANSIT_DEFINE_ERROR(Infeasible, kExitInfeasible);
TRANSIT_DEFINE_ERROR(TooLarge, kExitTooLarge);
TRANSIT_DEFINE_ERROR(NoConvergence, kExitNoConvergence);

#undef TRANSIT_DEFINE_ERROR

// Upper bound on enumerated profiles; TRANSIT_PROFILE_CAP overrides.
inline std::uint64_t ProfileCap() {
  if (const char* env = std::getenv("TRANSIT_PROFILE_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 10'000'000ULL;
}

}  // namespace transit

#endif  // TRANSIT_ERRORS_H_
