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

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "qckit/cyclic.hpp"
#include "qckit/quasi_cyclic.hpp"

namespace qckit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "qckit-1";

/// {"p", "e", "modulus"}; modulus (ascending F_p coefficients) only when e > 1.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

/// Ascending coordinate array over the immediate base; a prime-field element is [c].
Json elem_to_json(const Field& f, Elem a);
/// Accepts the array form or a bare integer element code.
Elem elem_from_json(const Field& f, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const Json& j);

Json map_to_json(const Field& f, const MonomialMap& m);
Json code_rows_to_json(const LinearCode& c);

struct CodeFile {
    LinearCode code;
    std::optional<CyclicCode> cyclic;
    /// (l, m) when the file carries a quasi-cyclic block.
    std::optional<std::pair<std::size_t, std::size_t>> qc;

    /// The code as quasi-cyclic: the qc block when present, otherwise index n and m = 1.
    QuasiCyclicCode as_quasi_cyclic() const;
};

CodeFile code_file_from_json(const Json& j);
Json code_file_to_json(const CodeFile& f);
CodeFile make_code_file(const QuasiCyclicCode& c);
CodeFile make_code_file(const CyclicCode& c);

Json classification_to_json(const FactorClassification& c);
Json decomposition_to_json(const ConstituentDecomposition& d);
Json verdict_to_json(const Field& f, const IsodualVerdict& v);
Json enumeration_to_json(const EnumerationReport& r);

}  // namespace qckit
