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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qckit/cli.hpp"
#include "qckit/codec.hpp"
#include "support.hpp"

using namespace qckit;
using namespace qckit::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qckit_test_" + name + ".json")).string();
}

std::string write_file(const std::string& name, const Json& j) {
    const auto path = temp_path(name);
    std::ofstream(path) << j.dump(2);
    return path;
}

Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

CodeFile roundtrip(const CodeFile& f) { return code_file_from_json(Json::parse(code_file_to_json(f).dump())); }

}  // namespace

TEST_CASE("codec: code files round-trip with a stable serialization") {
    std::mt19937_64 rng(kSeed);
    for (std::uint64_t q : {2, 3, 4, 8, 9, 25}) {
        const auto F = field_of(q);
        for (int t = 0; t < 20; ++t) {
            const auto n = 1 + rng() % 8;
            CodeFile f{random_code(F, n, n, rng), std::nullopt, std::nullopt};
            const auto back = roundtrip(f);
            CHECK(back.code == f.code);
            CHECK(code_file_to_json(back).dump() == code_file_to_json(f).dump());
        }
        const auto qc = random_qc(F, 2, 7, 2, rng);
        const auto back = roundtrip(make_code_file(qc));
        REQUIRE(back.qc.has_value());
        CHECK(back.as_quasi_cyclic() == qc);
    }
    const auto f2 = field_of(2);
    const auto ham = CyclicCode::make(f2, 7, P(f2, {1, 1, 0, 1}));
    const auto back = roundtrip(make_code_file(ham));
    REQUIRE(back.cyclic.has_value());
    CHECK(*back.cyclic == ham);
}

TEST_CASE("codec: local-field elements nest by tower level") {
    const auto f2 = field_of(2);
    const auto ring = qc_ring(f2, 7);
    for (const auto& lf : ring->local_fields) {
        const Field& F = *lf;
        for (Elem a = 0; a < F.size(); ++a) CHECK(elem_from_json(F, elem_to_json(F, a)) == a);
    }
}

TEST_CASE("codec: malformed files are rejected with Format") {
    const auto f3 = field_of(3);
    Json good = code_file_to_json(CodeFile{LinearCode::full(f3, 2), std::nullopt, std::nullopt});
    CHECK_NOTHROW(code_file_from_json(good));

    auto expect_format = [](const Json& j) {
        try {
            code_file_from_json(j);
            FAIL("accepted malformed input: " << j.dump());
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Format);
        }
    };
    Json extra = good;
    extra["surprise"] = 1;
    expect_format(extra);
    Json no_version = good;
    no_version.erase("format_version");
    expect_format(no_version);
    Json wrong_version = good;
    wrong_version["format_version"] = "qckit-0";
    expect_format(wrong_version);
    Json bad_elem = good;
    bad_elem["generators"][0][0] = Json::array({7});
    expect_format(bad_elem);
    Json bad_len = good;
    bad_len["n"] = 3;
    expect_format(bad_len);
    Json bad_cyclic = good;
    bad_cyclic["cyclic"] = Json{{"n", 2}, {"g", Json::array({Json::array({1}), Json::array({1})})}};
    expect_format(bad_cyclic);
}

TEST_CASE("cli: factor --q 2 --m 7") {
    const auto r = cli({"factor", "--q", "2", "--m", "7"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j.at("delta") == Json::parse("[1]"));
    CHECK(j.at("self_reciprocal") == Json::parse("[[[1],[1]]]"));
    CHECK(j.at("pairs") == Json::parse("[[[[1],[1],[0],[1]],[[1],[0],[1],[1]]]]"));
    CHECK(cli({"factor", "--q", "2^1", "--m", "7"}).out == r.out);
    CHECK(cli({"factor", "--q", "4", "--m", "5"}).out == cli({"factor", "--q", "2^2", "--m", "5"}).out);
}

TEST_CASE("cli: isodual bruteforce on the self-dual [6,3] code") {
    const auto f2 = field_of(2);
    const auto c = QuasiCyclicCode::from_rows(f2, 2, 3, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
    const auto path = write_file("sd63", code_file_to_json(make_code_file(c)));
    const auto r = cli({"--json", "isodual", path, "--strategy", "bruteforce"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j.at("result") == "isodual");
    CHECK(j.at("witness").at("perm") == Json::parse("[0,1,2,3,4,5]"));
    CHECK(j.at("witness").at("kind") == "permutation");
    CHECK(cli({"selfdual", path}).code == 0);
    CHECK(cli({"isodual", path}).code == 0);

    const auto small = cli({"--json", "isodual", path, "--strategy", "bruteforce", "--cutoff", "4"});
    CHECK(small.code == 2);
    CHECK(small.json().at("error").at("kind") == "CutoffExceeded");
}

TEST_CASE("cli: equiv cyclic on the two Hamming generators") {
    const auto f2 = field_of(2);
    const auto a = write_file("ham_a", code_file_to_json(make_code_file(CyclicCode::make(f2, 7, P(f2, {1, 1, 0, 1})))));
    const auto b = write_file("ham_b", code_file_to_json(make_code_file(CyclicCode::make(f2, 7, P(f2, {1, 0, 1, 1})))));
    const auto r = cli({"--json", "equiv", "cyclic", a, b});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("equivalent") == true);
    CHECK(r.json().at("multiplier") == 3);
    CHECK(cli({"equiv", "linear", a, b}).code == 0);

    const auto c = write_file("rep7", code_file_to_json(make_code_file(CyclicCode::make(f2, 7, P(f2, {1, 1})))));
    CHECK(cli({"equiv", "cyclic", a, c}).code == 1);
}

TEST_CASE("cli: dual writes a code file equal to the library dual") {
    std::mt19937_64 rng(kSeed);
    const auto F = field_of(3);
    const auto c = random_qc(F, 2, 4, 2, rng);
    const auto in = write_file("dual_in", code_file_to_json(make_code_file(c)));
    const auto out = temp_path("dual_out");
    REQUIRE(cli({"dual", in, "-o", out}).code == 0);
    std::ifstream f(out);
    const auto back = code_file_from_json(Json::parse(f)).as_quasi_cyclic();
    CHECK(back == qc_dual(c));
}

TEST_CASE("cli: construct subcommands") {
    const auto r = cli({"--json", "construct", "isodual-cyclic", "--q", "3", "--s", "5", "--variant", "A"});
    REQUIRE(r.code == 0);
    CHECK(r.json().at("length") == 10);
    CHECK(r.json().at("dimension") == 5);

    const auto sd = cli({"--json", "construct", "selfdual-qc", "--q", "5", "--l", "2", "--m", "4"});
    REQUIRE(sd.code == 0);
    const auto code = code_file_from_json(sd.json().at("code")).as_quasi_cyclic();
    CHECK(euclidean_dual(code.code()) == code.code());

    const auto none = cli({"--json", "construct", "selfdual-qc", "--q", "3", "--l", "2", "--m", "4"});
    CHECK(none.code == 2);
    CHECK(none.json().at("error").at("kind") == "NoGamma");

    const auto iso = cli({"--json", "construct", "isodual-qc", "--q", "2", "--l", "2", "--m", "3"});
    CHECK(iso.code == 0);
    CHECK(iso.json().at("verdict").at("result") == "isodual");
}

TEST_CASE("cli: errors are structured") {
    auto usage = cli({"--json", "frobnicate"});
    CHECK(usage.code == 2);
    CHECK(Json::parse(usage.err).at("error").at("kind") == "Usage");

    auto io = cli({"--json", "selfdual", temp_path("does_not_exist")});
    CHECK(io.code == 2);
    CHECK(io.json().at("error").at("kind") == "Io");
    CHECK(io.json().at("error").at("format_version") == "qckit-1");

    auto bad_q = cli({"--json", "factor", "--q", "6", "--m", "3"});
    CHECK(bad_q.code == 2);
    CHECK(bad_q.json().at("error").at("kind") == "NotPrime");

    auto coprime = cli({"--json", "factor", "--q", "2", "--m", "4"});
    CHECK(coprime.code == 2);
    CHECK(coprime.json().at("error").at("kind") == "NotCoprime");

    const auto path = write_file("garbage", Json{{"format_version", "qckit-1"}});
    auto fmt = cli({"--json", "decompose", path});
    CHECK(fmt.code == 2);
    CHECK(fmt.json().at("error").at("kind") == "Format");
}

TEST_CASE("cli: selfdual exit codes and a single selftest item") {
    const auto f2 = field_of(2);
    const auto rep = write_file("rep", code_file_to_json(make_code_file(QuasiCyclicCode::from_rows(f2, 2, 3, {{1, 1, 1, 1, 1, 1}}))));
    CHECK(cli({"selfdual", rep}).code == 1);
    const auto st = cli({"--json", "selftest", "--only", "factorization"});
    CHECK(st.code == 0);
    CHECK(st.json().at("items").at(0).at("name") == "factorization");
}
