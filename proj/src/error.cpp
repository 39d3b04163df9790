/*
   Copyright 2026 The qckit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qckit/error.hpp"

namespace qckit {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::ZeroScalar: return "ZeroScalar";
        case ErrorKind::MultiplierNotCoprime: return "MultiplierNotCoprime";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::CutoffExceeded: return "CutoffExceeded";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotDivisor: return "NotDivisor";
        case ErrorKind::NotRootOfUnity: return "NotRootOfUnity";
        case ErrorKind::NotCofactors: return "NotCofactors";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::NotShiftInvariant: return "NotShiftInvariant";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DualMismatch: return "DualMismatch";
        case ErrorKind::NoGamma: return "NoGamma";
        case ErrorKind::NotCyclicConstituents: return "NotCyclicConstituents";
        case ErrorKind::NotPrimeIndex: return "NotPrimeIndex";
        case ErrorKind::Format: return "Format";
        case ErrorKind::Usage: return "Usage";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace qckit
