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

#include "symex/errors.hpp"

namespace symex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ImaginaryPhase: return "ImaginaryPhase";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::UnsupportedLattice: return "UnsupportedLattice";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::ProbabilityOverflow: return "ProbabilityOverflow";
    case ErrorKind::LocationMismatch: return "LocationMismatch";
    case ErrorKind::ZeroWeightSum: return "ZeroWeightSum";
    case ErrorKind::DegenerateNormalisation: return "DegenerateNormalisation";
    case ErrorKind::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::EqualBiases: return "EqualBiases";
    case ErrorKind::UnitFidelity: return "UnitFidelity";
    case ErrorKind::MissingFraction: return "MissingFraction";
    case ErrorKind::UnsupportedNoise: return "UnsupportedNoise";
    case ErrorKind::EmptyThresholdSet: return "EmptyThresholdSet";
    case ErrorKind::NonCommutingObservable: return "NonCommutingObservable";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ZeroMeanDenominator: return "ZeroMeanDenominator";
    case ErrorKind::SingularPencil: return "SingularPencil";
    case ErrorKind::BadCycleOrder: return "BadCycleOrder";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::AllSeedsFiltered: return "AllSeedsFiltered";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace symex
