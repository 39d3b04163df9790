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

#include "qckit/codec.hpp"

#include <set>

namespace qckit {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw Error(ErrorKind::Format, what + " (format " + kFormatVersion + ")");
}

void only_keys(const Json& j, const char* where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) bad(std::string(where) + " must be an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) bad("unknown key '" + key + "' in " + where);
    }
}

std::uint64_t uint_at(const Json& j, const char* key, const char* where) {
    if (!j.contains(key)) bad(std::string("missing '") + key + "' in " + where);
    const Json& v = j.at(key);
    if (!v.is_number_unsigned()) bad(std::string("'") + key + "' in " + where + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

const char* kind_name(SlotKind k) {
    switch (k) {
        case SlotKind::self_reciprocal: return "self_reciprocal";
        case SlotKind::primed: return "primed";
        default: return "double_primed";
    }
}

const char* result_name(IsodualResult r) {
    switch (r) {
        case IsodualResult::isodual: return "isodual";
        case IsodualResult::not_isodual: return "not_isodual";
        default: return "inconclusive";
    }
}

}  // namespace

Json field_to_json(const Field& f) {
    Json j;
    j["p"] = f.characteristic();
    j["e"] = f.absolute_degree();
    if (!f.is_prime_field()) {
        if (!f.base()->is_prime_field()) bad("only fields over a prime field serialize");
        j["modulus"] = f.modulus();
    }
    return j;
}

FieldPtr field_from_json(const Json& j) {
    only_keys(j, "field", {"p", "e", "modulus"});
    const auto p = uint_at(j, "p", "field");
    const auto e = uint_at(j, "e", "field");
    if (p > 0xffffffffu || e == 0 || e > 64) bad("field parameters out of range");
    if (!j.contains("modulus")) return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
    if (e == 1) bad("a prime field carries no modulus");
    const Json& mod = j.at("modulus");
    if (!mod.is_array() || mod.size() != e + 1) bad("modulus must list e + 1 coefficients");
    std::vector<Elem> coeffs;
    for (const auto& c : mod) {
        if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= p) bad("modulus coefficients must lie in [0, p)");
        coeffs.push_back(c.get<Elem>());
    }
    return Field::extension(Field::prime(static_cast<std::uint32_t>(p)), std::move(coeffs));
}

Json elem_to_json(const Field& f, Elem a) {
    if (f.is_prime_field()) return Json::array({a});
    Json out = Json::array();
    for (Elem c : f.coefficients(a)) out.push_back(f.base()->is_prime_field() ? Json(c) : elem_to_json(*f.base(), c));
    return out;
}

Elem elem_from_json(const Field& f, const Json& j) {
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v >= f.size()) bad("element code " + std::to_string(v) + " outside " + f.describe());
        return static_cast<Elem>(v);
    }
    if (!j.is_array()) bad("element must be an integer or a coefficient array");
    if (f.is_prime_field()) {
        if (j.size() > 1) bad("prime-field element with more than one coefficient");
        return j.empty() ? 0 : elem_from_json(f, j.at(0));
    }
    if (j.size() > f.degree()) bad("element has more coefficients than the field degree");
    std::vector<Elem> c(f.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) c[i] = elem_from_json(*f.base(), j.at(i));
    return f.from_coefficients(c);
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (Elem c : p.coeffs()) out.push_back(elem_to_json(p.ring(), c));
    return out;
}

Poly poly_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) bad("polynomial must be a coefficient array");
    std::vector<Elem> c;
    for (const auto& e : j) c.push_back(elem_from_json(*f, e));
    return Poly(f, std::move(c));
}

Json map_to_json(const Field& f, const MonomialMap& m) {
    Json j;
    j["kind"] = m.is_permutation() ? "permutation" : "monomial";
    j["perm"] = m.perm;
    Json diag = Json::array();
    for (Elem d : m.diag) diag.push_back(elem_to_json(f, d));
    j["diag"] = std::move(diag);
    return j;
}

Json code_rows_to_json(const LinearCode& c) {
    Json rows = Json::array();
    for (const auto& r : c.rows()) {
        Json row = Json::array();
        for (Elem e : r) row.push_back(elem_to_json(*c.field(), e));
        rows.push_back(std::move(row));
    }
    return rows;
}

QuasiCyclicCode CodeFile::as_quasi_cyclic() const {
    if (qc) return QuasiCyclicCode::make(qc->first, qc->second, code);
    return QuasiCyclicCode::make(code.length(), 1, code);
}

CodeFile code_file_from_json(const Json& j) {
    only_keys(j, "code file", {"format_version", "field", "n", "generators", "cyclic", "qc"});
    if (!j.contains("format_version") || j.at("format_version") != kFormatVersion)
        bad(std::string("format_version must be \"") + kFormatVersion + "\"");
    if (!j.contains("field")) bad("missing 'field'");
    auto field = field_from_json(j.at("field"));
    const auto n = uint_at(j, "n", "code file");
    if (n == 0) bad("n must be positive");
    if (!j.contains("generators") || !j.at("generators").is_array()) bad("'generators' must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto& row : j.at("generators")) {
        if (!row.is_array() || row.size() != n) bad("every generator row must have n entries");
        std::vector<Elem> r;
        for (const auto& e : row) r.push_back(elem_from_json(*field, e));
        rows.push_back(std::move(r));
    }
    CodeFile out{LinearCode::from_rows(field, n, rows), std::nullopt, std::nullopt};
    if (j.contains("cyclic")) {
        const Json& c = j.at("cyclic");
        only_keys(c, "cyclic", {"n", "g"});
        if (uint_at(c, "n", "cyclic") != n) bad("cyclic.n differs from n");
        if (!c.contains("g")) bad("missing 'g' in cyclic");
        auto cyc = CyclicCode::make_repeated_root(field, n, poly_from_json(field, c.at("g")));
        if (!(cyc.to_linear() == out.code)) bad("cyclic generator does not match the generator rows");
        out.cyclic = std::move(cyc);
    }
    if (j.contains("qc")) {
        const Json& q = j.at("qc");
        only_keys(q, "qc", {"l", "m"});
        const auto l = uint_at(q, "l", "qc"), m = uint_at(q, "m", "qc");
        if (l * m != n) bad("qc.l * qc.m differs from n");
        QuasiCyclicCode::make(l, m, out.code);
        out.qc = std::make_pair(static_cast<std::size_t>(l), static_cast<std::size_t>(m));
    }
    return out;
}

Json code_file_to_json(const CodeFile& f) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["field"] = field_to_json(*f.code.field());
    j["n"] = f.code.length();
    j["generators"] = code_rows_to_json(f.code);
    if (f.cyclic) j["cyclic"] = Json{{"n", f.cyclic->length()}, {"g", poly_to_json(f.cyclic->generator_poly())}};
    if (f.qc) j["qc"] = Json{{"l", f.qc->first}, {"m", f.qc->second}};
    return j;
}

CodeFile make_code_file(const QuasiCyclicCode& c) {
    return {c.code(), std::nullopt, std::make_pair(c.index(), c.co_index())};
}

CodeFile make_code_file(const CyclicCode& c) { return {c.to_linear(), c, std::nullopt}; }

Json classification_to_json(const FactorClassification& c) {
    Json j;
    j["q"] = c.field->size();
    j["m"] = c.m;
    j["delta"] = elem_to_json(*c.field, c.delta);
    Json sr = Json::array();
    for (const auto& g : c.self_reciprocal) sr.push_back(poly_to_json(g));
    j["self_reciprocal"] = std::move(sr);
    Json pairs = Json::array();
    for (const auto& p : c.pairs) pairs.push_back(Json::array({poly_to_json(p.h), poly_to_json(p.h_star)}));
    j["pairs"] = std::move(pairs);
    j["s"] = c.s();
    j["t"] = c.t();
    j["r"] = c.r();
    return j;
}

Json decomposition_to_json(const ConstituentDecomposition& d) {
    Json j;
    j["q"] = d.ring->field->size();
    j["l"] = d.l;
    j["m"] = d.ring->m;
    j["classification"] = classification_to_json(d.ring->classification);
    Json comps = Json::array();
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        const auto& K = *d.ring->local_fields[k];
        Json c;
        c["slot"] = k;
        c["kind"] = kind_name(d.ring->kinds[k]);
        c["factor"] = poly_to_json(d.ring->factors[k]);
        c["degree"] = K.degree();
        c["conjugation_exponent"] = K.conjugation_exponent();
        c["dimension"] = d.components[k].dimension();
        c["generators"] = code_rows_to_json(d.components[k]);
        comps.push_back(std::move(c));
    }
    j["constituents"] = std::move(comps);
    return j;
}

Json verdict_to_json(const Field& f, const IsodualVerdict& v) {
    Json j;
    j["result"] = result_name(v.result);
    j["strategy"] = v.strategy == IsodualStrategy::components ? "components" : "bruteforce";
    j["equivalence"] = "permutation";
    j["witness"] = v.witness ? map_to_json(f, *v.witness) : Json(nullptr);
    Json comps = Json::array();
    for (const auto& c : v.component_report) {
        Json e;
        e["slot"] = c.slot;
        e["kind"] = kind_name(c.kind);
        e["equivalent"] = c.equivalent;
        e["perm"] = c.witness ? Json(c.witness->perm) : Json(nullptr);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json enumeration_to_json(const EnumerationReport& r) {
    Json j;
    j["r"] = r.r;
    j["p"] = r.p;
    j["tuples_counted"] = r.tuples_counted;
    j["distinct_codes"] = r.distinct_codes;
    Json orbit = Json::array();
    for (const auto& e : r.orbit) orbit.push_back(Json{{"multipliers", e.multipliers}, {"hash", e.hash}});
    j["orbit"] = std::move(orbit);
    return j;
}

}  // namespace qckit
