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

#include "qckit/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "qckit/codec.hpp"
#include "qckit/selftest.hpp"

namespace qckit {

namespace {

struct Outcome {
    Json report;
    int code = 0;
};

FieldPtr parse_q(const std::string& s) {
    try {
        std::size_t pos = 0;
        const auto caret = s.find('^');
        if (caret == std::string::npos) {
            const auto q = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            const auto [p, e] = prime_power(q);
            return make_field(p, e);
        }
        const auto p = std::stoul(s.substr(0, caret), &pos);
        if (pos != caret) throw std::invalid_argument(s);
        const auto e = std::stoul(s.substr(caret + 1), &pos);
        if (pos != s.size() - caret - 1) throw std::invalid_argument(s);
        return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::BadParameters, "cannot read field size '" + s + "'; use p^e or an integer");
    }
}

CodeFile read_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Format, path + ": " + e.what());
    }
    return code_file_from_json(j);
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
}

/// Attaches the code file to the report, or writes it when a path is given.
void emit_code(Json& rep, const CodeFile& file, const std::string& path) {
    const Json j = code_file_to_json(file);
    if (path.empty()) {
        rep["code"] = j;
    } else {
        write_json(path, j);
        rep["output"] = path;
    }
}

CyclicCode as_cyclic(const CodeFile& f, const std::string& path) {
    if (f.cyclic) return *f.cyclic;
    if (auto c = CyclicCode::from_linear(f.code)) return *c;
    throw Error(ErrorKind::NotShiftInvariant, path + " is not a cyclic code");
}

Json error_json(std::string_view kind, const std::string& message) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}, {"format_version", kFormatVersion}}}};
}

void print_human(std::ostream& out, const Json& rep) {
    for (const auto& [key, value] : rep.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>() << "\n";
        else
            out << value.dump() << "\n";
    }
}

void print_selftest(std::ostream& out, const Json& rep) {
    for (const auto& item : rep.at("items")) {
        out << (item.at("passed").get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(24)
            << item.at("name").get<std::string>() << std::right << std::fixed << std::setprecision(2) << std::setw(8)
            << item.at("seconds").get<double>() << "s  " << item.at("detail").get<std::string>() << "\n";
        for (const auto& f : item.at("findings")) out << "      finding: " << f.get<std::string>() << "\n";
    }
    out << "seed " << rep.at("seed").get<std::uint64_t>() << ", " << std::fixed << std::setprecision(2)
        << rep.at("seconds").get<double>() << "s, " << (rep.at("passed").get<bool>() ? "all passed" : "FAILED")
        << "\n";
}

int verdict_exit(IsodualResult r) {
    return r == IsodualResult::isodual ? 0 : r == IsodualResult::not_isodual ? 1 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qckit: quasi-cyclic codes over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", json, "Print reports as JSON");
    app.add_option("--seed", seed, "Seed for randomized corpora");

    std::string q_arg, file, file_b, output, strategy = "components", mode = "permutation", variant = "B", only;
    std::size_t m = 0, l = 0, s = 0, cutoff = 8;

    auto* factor = app.add_subcommand("factor", "Classified factorization of Y^m - 1");
    factor->add_option("--q", q_arg, "Field size p^e")->required();
    factor->add_option("--m", m, "Exponent m")->required();

    auto* decompose = app.add_subcommand("decompose", "Constituent codes of a quasi-cyclic code");
    decompose->add_option("code", file)->required();

    auto* dual = app.add_subcommand("dual", "Euclidean dual");
    dual->add_option("code", file)->required();
    dual->add_option("-o", output, "Output code file");

    auto* selfdual = app.add_subcommand("selfdual", "Self-duality check");
    selfdual->add_option("code", file)->required();

    auto* isodual = app.add_subcommand("isodual", "Isoduality check");
    isodual->add_option("code", file)->required();
    isodual->add_option("--strategy", strategy)->check(CLI::IsMember({"components", "bruteforce"}));
    isodual->add_option("--cutoff", cutoff);

    auto* equiv = app.add_subcommand("equiv", "Equivalence of two codes");
    equiv->require_subcommand(1);
    auto* eq_linear = equiv->add_subcommand("linear", "Permutation or monomial equivalence");
    auto* eq_cyclic = equiv->add_subcommand("cyclic", "Multiplier equivalence of cyclic codes");
    auto* eq_qc = equiv->add_subcommand("qc", "Multiplier equivalence of quasi-cyclic codes");
    for (auto* sub : {eq_linear, eq_cyclic, eq_qc}) {
        sub->add_option("a", file)->required();
        sub->add_option("b", file_b)->required();
    }
    eq_linear->add_option("--mode", mode)->check(CLI::IsMember({"permutation", "monomial"}));
    eq_linear->add_option("--cutoff", cutoff);

    auto* construct = app.add_subcommand("construct", "Build codes");
    construct->require_subcommand(1);
    auto* c_iso_cyc = construct->add_subcommand("isodual-cyclic", "Isodual cyclic code of length 2s");
    c_iso_cyc->add_option("--q", q_arg)->required();
    c_iso_cyc->add_option("--s", s)->required();
    c_iso_cyc->add_option("--variant", variant)->check(CLI::IsMember({"A", "B"}));
    auto* c_sd_qc = construct->add_subcommand("selfdual-qc", "Self-dual quasi-cyclic code");
    auto* c_iso_qc = construct->add_subcommand("isodual-qc", "Quasi-cyclic code with isodual cyclic constituents");
    for (auto* sub : {c_sd_qc, c_iso_qc}) {
        sub->add_option("--q", q_arg)->required();
        sub->add_option("--l", l)->required();
        sub->add_option("--m", m)->required();
    }
    c_iso_qc->add_option("--cutoff", cutoff);
    for (auto* sub : {c_iso_cyc, c_sd_qc, c_iso_qc}) sub->add_option("-o", output, "Output code file");

    auto* enumerate = app.add_subcommand("enumerate", "Multiplier orbit of a prime-index code");
    enumerate->add_option("code", file)->required();

    auto* selftest = app.add_subcommand("selftest", "Run the invariant corpus");
    selftest->add_option("--only", only, "Run a single item");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("Usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        Outcome o;
        Json& rep = o.report;
        if (factor->parsed()) {
            rep = classification_to_json(factor_cyclic_modulus(parse_q(q_arg), m));
            out << rep.dump(json ? 2 : -1) << "\n";
            return 0;
        } else if (decompose->parsed()) {
            rep = decomposition_to_json(crt_decompose(read_code(file).as_quasi_cyclic()));
        } else if (dual->parsed()) {
            const auto f = read_code(file);
            CodeFile d{f.code, std::nullopt, std::nullopt};
            if (f.qc) {
                d = make_code_file(qc_dual(f.as_quasi_cyclic()));
                rep["routes"] = "kernel and constituent duals agree";
            } else if (f.cyclic) {
                d = make_code_file(cyclic_dual(*f.cyclic));
            } else {
                d.code = euclidean_dual(f.code);
            }
            rep["dimension"] = f.code.dimension();
            rep["dual_dimension"] = d.code.dimension();
            emit_code(rep, d, output);
        } else if (selfdual->parsed()) {
            const auto c = read_code(file).as_quasi_cyclic();
            const auto r = selfdual_report(c);
            rep["self_dual"] = r.direct;
            rep["componentwise"] = r.componentwise;
            rep["direct"] = r.direct;
            if (r.componentwise != r.direct) throw Error(ErrorKind::DualMismatch, "componentwise and direct checks differ");
            o.code = r.direct ? 0 : 1;
        } else if (isodual->parsed()) {
            const auto c = read_code(file).as_quasi_cyclic();
            const auto v = is_isodual(c, strategy == "bruteforce" ? IsodualStrategy::bruteforce : IsodualStrategy::components, cutoff);
            if (v.result == IsodualResult::inconclusive) throw Error(ErrorKind::CutoffExceeded, "inconclusive: " + v.note);
            rep = verdict_to_json(*c.field(), v);
            o.code = verdict_exit(v.result);
        } else if (eq_linear->parsed()) {
            const auto a = read_code(file), b = read_code(file_b);
            const auto md = mode == "monomial" ? EquivalenceMode::monomial : EquivalenceMode::permutation;
            const auto w = equivalence_search(a.code, b.code, {md, cutoff});
            rep["equivalent"] = w.has_value();
            rep["mode"] = mode;
            rep["witness"] = w ? map_to_json(*a.code.field(), *w) : Json(nullptr);
            o.code = w ? 0 : 1;
        } else if (eq_cyclic->parsed()) {
            const auto a = as_cyclic(read_code(file), file), b = as_cyclic(read_code(file_b), file_b);
            const auto w = multiplier_equivalent(a, b);
            rep["equivalent"] = w.has_value();
            rep["equivalence"] = "multiplier";
            rep["multiplier"] = w ? Json(*w) : Json(nullptr);
            o.code = w ? 0 : 1;
        } else if (eq_qc->parsed()) {
            const auto a = read_code(file).as_quasi_cyclic(), b = read_code(file_b).as_quasi_cyclic();
            const auto w = qc_multiplier_equivalent(a, b);
            rep["equivalent"] = w.has_value();
            rep["equivalence"] = "multiplier";
            rep["multipliers"] = w ? Json(*w) : Json(nullptr);
            o.code = w ? 0 : 1;
        } else if (c_iso_cyc->parsed()) {
            const auto F = parse_q(q_arg);
            const auto r = construct_isodual_cyclic(F, s, variant == "A" ? IsodualVariant::A : IsodualVariant::B);
            rep["length"] = r.code.length();
            rep["dimension"] = r.code.dimension();
            rep["self_dual"] = r.self_dual;
            rep["equivalence"] = r.witness.is_permutation() ? "permutation" : "monomial";
            rep["witness"] = map_to_json(*F, r.witness);
            emit_code(rep, make_code_file(r.code), output);
        } else if (c_sd_qc->parsed()) {
            const auto c = construct_selfdual_qc(parse_q(q_arg), l, m);
            rep["length"] = c.length();
            rep["dimension"] = c.code().dimension();
            rep["self_dual"] = true;
            emit_code(rep, make_code_file(c), output);
        } else if (c_iso_qc->parsed()) {
            const auto r = construct_isodual_qc(parse_q(q_arg), l, m, cutoff);
            rep["length"] = r.code.length();
            rep["dimension"] = r.code.code().dimension();
            rep["verdict"] = verdict_to_json(*r.code.field(), r.verdict);
            rep["monomial_isodual"] = r.monomial_isodual ? Json(*r.monomial_isodual) : Json(nullptr);
            if (r.monomial_isodual && *r.monomial_isodual && r.verdict.result == IsodualResult::not_isodual)
                rep["note"] = "monomially equivalent to its dual, but not permutation equivalent";
            emit_code(rep, make_code_file(r.code), output);
            o.code = verdict_exit(r.verdict.result);
        } else if (enumerate->parsed()) {
            const auto c = read_code(file).as_quasi_cyclic();
            rep = enumeration_to_json(enumerate_multiplier_equivalents(c));
            rep["seed_hash"] = code_hash(c.code());
        } else if (selftest->parsed()) {
            std::vector<SelftestItem> items;
            double total = 0;
            const auto names = only.empty() ? selftest_names() : std::vector<std::string>{only};
            for (const auto& name : names) {
                items.push_back(run_selftest_item(name, seed));
                total += items.back().seconds;
            }
            bool passed = true;
            Json arr = Json::array();
            for (const auto& it : items) {
                passed = passed && it.passed;
                arr.push_back(Json{{"name", it.name}, {"passed", it.passed}, {"seconds", it.seconds},
                                   {"detail", it.detail}, {"findings", it.findings}});
            }
            rep = Json{{"seed", seed}, {"passed", passed}, {"seconds", total}, {"items", std::move(arr)}};
            if (json)
                out << rep.dump(2) << "\n";
            else
                print_selftest(out, rep);
            return passed ? 0 : 1;
        }
        if (json)
            out << rep.dump(2) << "\n";
        else
            print_human(out, rep);
        return o.code;
    } catch (const Error& e) {
        (json ? out : err) << error_json(to_string(e.kind()), e.what()).dump(json ? 2 : -1) << "\n";
        return 2;
    } catch (const std::exception& e) {
        (json ? out : err) << error_json("Internal", e.what()).dump(json ? 2 : -1) << "\n";
        return 2;
    }
}

}  // namespace qckit
