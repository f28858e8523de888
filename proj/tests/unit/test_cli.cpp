/*
 * Copyright 2026 The cycloweight authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "cycloweight/cli.hpp"

using cycloweight::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Minimal JSON-schema walker covering the subset the published schema uses:
// type, required, properties, items, enum, pattern, $ref into $defs.
struct SchemaChecker {
    const nlohmann::json& root;

    const nlohmann::json& resolve(const nlohmann::json& node) const {
        if (node.contains("$ref")) {
            const std::string ref = node["$ref"];
            const std::string prefix = "#/$defs/";
            REQUIRE(ref.rfind(prefix, 0) == 0);
            return root["$defs"].at(ref.substr(prefix.size()));
        }
        return node;
    }

    void validate(const nlohmann::json& value, const nlohmann::json& raw_schema) const {
        const nlohmann::json& schema = resolve(raw_schema);
        if (schema.contains("enum")) {
            bool hit = false;
            for (const auto& cand : schema["enum"]) hit = hit || cand == value;
            CHECK_MESSAGE(hit, "value not in enum: ", value.dump());
        }
        if (schema.contains("type")) {
            const std::string type = schema["type"];
            if (type == "object") CHECK(value.is_object());
            if (type == "array") CHECK(value.is_array());
            if (type == "string") CHECK(value.is_string());
            if (type == "integer") CHECK(value.is_number_integer());
            if (type == "boolean") CHECK(value.is_boolean());
        }
        if (schema.contains("pattern") && value.is_string()) {
            CHECK(std::regex_match(value.get<std::string>(),
                                   std::regex(schema["pattern"].get<std::string>())));
        }
        if (schema.contains("required")) {
            for (const auto& key : schema["required"])
                CHECK_MESSAGE(value.contains(key.get<std::string>()), "missing key: ",
                              key.get<std::string>());
        }
        if (schema.contains("properties") && value.is_object()) {
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key)) validate(value.at(key), sub);
        }
        if (schema.contains("items") && value.is_array()) {
            for (const auto& item : value) validate(item, schema["items"]);
        }
    }
};

void check_against_schema(const std::string& report, const std::string& command) {
    std::ifstream f(std::string(CYCLOWEIGHT_SOURCE_DIR) + "/schemas/report.schema.json");
    REQUIRE(f.good());
    const nlohmann::json schema = nlohmann::json::parse(f);
    const nlohmann::json j = nlohmann::json::parse(report);
    const SchemaChecker checker{schema};
    checker.validate(j, schema);  // common shape
    checker.validate(j, schema["$defs"].at(command + "_report"));
    CHECK(j["command"] == command);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("validation errors exit 1 with the message on stderr") {
    const Result r = invoke({"params", "-p", "3", "-m", "4", "-k", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("m must be odd") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(invoke({"params", "-p", "9", "-m", "5", "-k", "1"}).code == 1);
    CHECK(invoke({"params", "-p", "3", "-m", "9", "-k", "3"}).code == 1);
}

TEST_CASE("unknown flags and missing subcommands exit 1") {
    CHECK(invoke({"params", "-p", "3", "-m", "5", "-k", "1", "--bogus"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({}).code == 1);
}

TEST_CASE("params reports the code invariants") {
    const Result r = invoke({"params", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "params");
    CHECK(j["params"]["q"] == 243);
    CHECK(j["d1_mod_n"] == 4);
    CHECK(j["d2_mod_n"] == 10);
    CHECK(j["check_poly_degrees"] == nlohmann::json::array({5, 5, 5, 5}));
    CHECK(j["check_poly_product_degree"] == 20);
    CHECK(j["code"]["length"] == 242);
    CHECK(j["code"]["dimension"] == 20);
    CHECK(j["code"]["min_distance"] == 81);
    CHECK(j["status"] == "ok");
}

TEST_CASE("table3 csv has the full 12-row table with an LF header") {
    const Result r = invoke({"table3", "-p", "3", "-m", "5", "-k", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        if (!line.empty()) rows.push_back(line);
    REQUIRE(rows.size() == 13);  // header + 12 rows
    CHECK(rows[0] == "weight,frequency");
    CHECK(rows[1] == "0,1");
    // the vanishing extreme row is present
    bool has_243 = false;
    for (const auto& row : rows) has_243 = has_243 || row == "243,0";
    CHECK(has_243);
}

TEST_CASE("table3 json carries frequencies as decimal strings") {
    const Result r = invoke({"table3", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["min_distance"] == 81);
    bool found = false;
    for (const auto& e : j["weights"]) {
        CHECK(e["frequency"].is_string());
        if (e["weight"] == 162) {
            CHECK(e["frequency"] == "1618713316");
            found = true;
        }
    }
    CHECK(found);
    CHECK(j["total"] == "3486784401");
}

TEST_CASE("table1 and table2 emit classified entries") {
    const Result r1 = invoke({"table1", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r1.code == 0);
    const auto j1 = nlohmann::json::parse(r1.out);
    CHECK(j1["total"] == "14348907");
    CHECK(j1["table_rows"] == 8);
    for (const auto& e : j1["entries"]) {
        CHECK(e.contains("kind"));
        CHECK(e.contains("epsilon"));
        CHECK(e.contains("i"));
        CHECK(e.contains("j"));
        CHECK(e["count"].is_string());
        CHECK(e["value"].is_string());
    }

    const Result r2 = invoke({"table2", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r2.code == 0);
    const auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["total"] == "3486784401");
    bool has_omega = false;
    for (const auto& e : j2["entries"])
        if (e["kind"] == "zero") {
            CHECK(e["count"] == "870543938");
            has_omega = true;
        }
    CHECK(has_omega);
}

TEST_CASE("count agrees with the closed forms at (3,5,1)") {
    const Result r = invoke({"count", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n2"] == "1");
    CHECK(j["n4"] == "468513");
    CHECK(j["n4_formula"] == "468513");
    CHECK(j["unit_sphere_plus"]["at_unit"] == 4);
    CHECK(j["unit_sphere_plus"]["histogram"]["8"] == "30");
    CHECK(j["unit_sphere_minus"]["histogram"]["8"] == "30");
    CHECK(j["status"] == "ok");
}

TEST_CASE("moments agree across closed form, table and counting oracle") {
    const Result r = invoke({"moments", "-p", "3", "-m", "5", "-k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m2_closed_form"] == "14348907");
    CHECK(j["m2_from_table1"] == "14348907");
    CHECK(j["m2_from_counting"] == "14348907");
    CHECK(j["m4_closed_form"] == j["m4_from_counting"]);
    CHECK(j["match"] == true);
}

TEST_CASE("budget refusal exits 1 and states the required budget") {
    const Result r =
        invoke({"verify-t", "-p", "3", "-m", "5", "-k", "1", "--budget", "1000"});
    CHECK(r.code == 1);
    CHECK(r.err.find("14348907") != std::string::npos);
}

TEST_CASE("json reports validate against the published schema") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"params", "-p", "3", "-m", "5", "-k", "1"}, "params"},
        {{"table1", "-p", "3", "-m", "5", "-k", "1"}, "table1"},
        {{"table2", "-p", "5", "-m", "5", "-k", "1"}, "table2"},
        {{"table3", "-p", "3", "-m", "7", "-k", "1"}, "table3"},
        {{"count", "-p", "3", "-m", "5", "-k", "1"}, "count"},
        {{"moments", "-p", "3", "-m", "5", "-k", "1"}, "moments"},
        {{"verify-code", "-p", "3", "-m", "5", "-k", "1", "--budget", "1000", "--sample", "20"},
         "verify-code"},
    };
    for (auto [args, command] : cases) {
        CAPTURE(command);
        args.push_back("--format");
        args.push_back("json");
        const Result r = invoke(args);
        REQUIRE(r.code == 0);
        check_against_schema(r.out, command);
    }
}

TEST_CASE("verify-t text report states the verdict in one line") {
    const Result r = invoke({"verify-t", "-p", "3", "-m", "5", "-k", "1", "--jobs", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "14348907 triples, 8 value classes, all frequencies match\n");
}

TEST_CASE("--out writes the report to a file instead of stdout") {
    const std::string path = "cli_out_test.csv";
    const Result r = invoke({"table3", "-p", "3", "-m", "5", "-k", "1", "--format", "csv",
                             "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str().rfind("weight,frequency\n0,1\n", 0) == 0);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("identical configuration gives byte-identical reports") {
    const std::vector<std::string> args{"verify-code", "-p", "3",      "-m",     "5",
                                        "-k",          "1", "--budget", "1000",  "--sample",
                                        "64",          "--seed", "99",  "--format", "json"};
    const Result a = invoke(args);
    const Result b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["exact_ran"] == false);  // budget keeps the sweep out of this test
    CHECK(j["sample_ok"] == true);
}

TEST_SUITE_END();
