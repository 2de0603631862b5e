// Copyright 2026 The symex Authors
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

namespace symex {

enum class ErrorKind {
  InvalidArgument,
  ImaginaryPhase,
  DimensionMismatch,
  NotUnitary,
  IndexOutOfRange,
  InvalidState,
  UnsupportedLattice,
  BadProbability,
  ProbabilityOverflow,
  LocationMismatch,
  ZeroWeightSum,
  DegenerateNormalisation,
  NonPositiveGamma,
  SingularDenominator,
  EqualBiases,
  UnitFidelity,
  MissingFraction,
  UnsupportedNoise,
  EmptyThresholdSet,
  NonCommutingObservable,
  ZeroDenominator,
  ZeroMeanDenominator,
  SingularPencil,
  BadCycleOrder,
  DimensionOverflow,
  AllSeedsFiltered,
  IoError,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and tests) can branch on the category instead of the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symex
