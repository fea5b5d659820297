// Copyright 2026 The Cevian Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cevian {

// Base of every error thrown by the library. kind() is a stable
// machine-readable tag; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CEVIAN_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

CEVIAN_DEFINE_ERROR(MalformedNumber);
CEVIAN_DEFINE_ERROR(ZeroDenominator);
CEVIAN_DEFINE_ERROR(DivisionByZero);
CEVIAN_DEFINE_ERROR(DegenerateInput);
CEVIAN_DEFINE_ERROR(CoincidentPoints);
CEVIAN_DEFINE_ERROR(CoincidentLines);
CEVIAN_DEFINE_ERROR(PointAtInfinity);
CEVIAN_DEFINE_ERROR(IndexOutOfRange);
CEVIAN_DEFINE_ERROR(TooFewVertices);
CEVIAN_DEFINE_ERROR(DegenerateDenominator);
CEVIAN_DEFINE_ERROR(BadParity);
CEVIAN_DEFINE_ERROR(DegenerateReference);
CEVIAN_DEFINE_ERROR(MismatchFound);
CEVIAN_DEFINE_ERROR(ConfigParseError);
CEVIAN_DEFINE_ERROR(IoError);

#undef CEVIAN_DEFINE_ERROR

}  // namespace cevian
