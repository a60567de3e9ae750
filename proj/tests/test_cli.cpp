#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "t8n/cli.hpp"
#include "t8n/setlang.hpp"

using namespace t8n;
using nlohmann::json;

namespace {

struct cli_result {
    int code;
    std::string out;
    std::string err;
};

cli_result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const std::string dense_expr = "cyclic(2,0) - identity + coset(2) + coset(1) + coset(3)";
const std::string normal_expr = "genclass(0,2) + coset(1) + coset(3)";

}  // namespace

TEST_CASE("spectrum command") {
    const cli_result text =
        run({"spectrum", "--n", "2", "--set", dense_expr, "--method", "both"});
    CHECK(text.code == 0);
    CHECK(text.out.find("[13]") != std::string::npos);
    CHECK(text.out.find("[-1]^8") != std::string::npos);
    CHECK(text.out.find("(exact)") != std::string::npos);

    SUBCASE("json report round-trips through the schema") {
        const cli_result res = run(
            {"spectrum", "--n", "2", "--set", normal_expr, "--method", "both", "--format", "json"});
        REQUIRE(res.code == 0);
        const json report = json::parse(res.out);
        CHECK(report["n"] == 2);
        CHECK(report.contains("command"));
        CHECK(report.contains("elapsed_ms"));
        CHECK(report["result"]["exact"] == true);
        CHECK(report["result"]["total_multiplicity"] == 16);
        const json& entries = report["result"]["entries"];
        REQUIRE(entries.size() == 5);
        CHECK(entries[0]["value"] == 10);
        CHECK(entries[0]["multiplicity"] == 1);
        CHECK(entries[4]["value"] == -6);
        // the embedded set JSON is the canonical encoding
        CHECK(connection_set_from_json(report["set"].dump()).size() == 10);
    }

    SUBCASE("csv") {
        const cli_result res =
            run({"spectrum", "--n", "2", "--set", normal_expr, "--format", "csv"});
        CHECK(res.code == 0);
        CHECK(res.out.rfind("eigenvalue,multiplicity\n", 0) == 0);
        CHECK(res.out.find("10,1\n") != std::string::npos);
        CHECK(res.out.find("0,8\n") != std::string::npos);
    }

    SUBCASE("multiplicities sum to 8 at n = 1") {
        const cli_result res = run({"spectrum", "--n", "1", "--set", "coset(1)+coset(3)",
                                    "--method", "both", "--format", "json"});
        REQUIRE(res.code == 0);
        CHECK(json::parse(res.out)["result"]["total_multiplicity"] == 8);
    }

    SUBCASE("symmetrize flag") {
        const cli_result bare = run({"spectrum", "--n", "2", "--set", "elem(1,0)"});
        CHECK(bare.code == 1);  // not symmetric
        const cli_result fixed =
            run({"spectrum", "--n", "2", "--set", "elem(1,0)", "--symmetrize"});
        CHECK(fixed.code == 0);
    }

    SUBCASE("parse failures exit 1") {
        CHECK(run({"spectrum", "--n", "2", "--set", "frob(1)"}).code == 1);
        CHECK(run({"spectrum", "--n", "2", "--set", "identity"}).code == 1);
    }
}

TEST_CASE("check command") {
    const cli_result all = run({"check", "--n", "3", "--set", dense_expr, "--method", "all"});
    REQUIRE(all.code == 0);
    const json report = json::parse(all.out);
    REQUIRE(report["result"].is_array());
    bool saw_oracle = false;
    for (const json& verdict : report["result"]) {
        if (verdict["applicable"].get<bool>()) CHECK(verdict["integral"] == true);
        if (verdict["method"] == "oracle") saw_oracle = true;
    }
    CHECK(saw_oracle);

    SUBCASE("theorem verdict false is still exit 0, with witnesses") {
        const cli_result res = run({"check", "--n", "3", "--set", "evencoset(1) + oddcoset(3)",
                                    "--method", "theorem5"});
        CHECK(res.code == 0);
        const json verdicts = json::parse(res.out)["result"];
        CHECK(verdicts[0]["integral"] == false);
        CHECK(verdicts[0]["failures"][0]["condition"] == "power_closed");
        CHECK(verdicts[0]["failures"][0].contains("witness"));
    }

    SUBCASE("not applicable exits 2") {
        const cli_result res = run(
            {"check", "--n", "3", "--set", "elem(0,2) + elem(3,2)", "--method", "theorem4"});
        CHECK(res.code == 2);
        CHECK(json::parse(res.out)["result"][0]["applicable"] == false);
    }

    SUBCASE("method=all on a set where theorem4 does not apply") {
        const cli_result res =
            run({"check", "--n", "2", "--set", normal_expr, "--method", "all"});
        CHECK(res.code == 0);
    }
}

TEST_CASE("enumerate command") {
    const cli_result res = run({"enumerate", "--n", "2", "--verify"});
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int count = 0;
    bool found_normal_family = false;
    const group g(2);
    const connection_set expected = evaluate(parse_set_expr(normal_expr), g);
    while (std::getline(lines, line)) {
        const connection_set s = connection_set_from_json(line);
        if (s == expected) found_normal_family = true;
        ++count;
    }
    CHECK(count > 10);
    CHECK(found_normal_family);

    SUBCASE("limit zero truncates with a notice") {
        const cli_result none = run({"enumerate", "--n", "2", "--limit", "0"});
        CHECK(none.code == 0);
        CHECK(none.out.empty());
        CHECK(none.err.find("truncated") != std::string::npos);
    }
}

TEST_CASE("chartable command") {
    const cli_result csv = run({"chartable", "--n", "3"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);  // header
    CHECK(line.rfind("character,degree", 0) == 0);
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 12);  // 2n+6 at n = 3

    SUBCASE("json export") {
        const cli_result res = run({"chartable", "--n", "3", "--format", "json"});
        REQUIRE(res.code == 0);
        const json table = json::parse(res.out);
        CHECK(table["characters"].size() == 12);
        CHECK(table["classes"].size() == 12);
        // chi_0 row is all ones
        for (const json& cell : table["characters"][0]["values"]) {
            CHECK(cell["coeffs"][0] == 1);
            CHECK(cell["re"] == doctest::Approx(1.0));
        }
        // phi and psi rows vanish on the b and b^3 columns
        for (const json& row : table["characters"]) {
            const std::string name = row["name"].get<std::string>();
            if (name.rfind("chi", 0) == 0) continue;
            for (std::size_t col = 0; col < table["classes"].size(); ++col) {
                const int rep_j = table["classes"][col]["representative"][1].get<int>();
                if (rep_j != 1 && rep_j != 3) continue;
                for (const json& c : row["values"][col]["coeffs"]) CHECK(c == 0);
            }
        }
    }
}

TEST_CASE("verify-families command") {
    const cli_result res = run({"verify-families", "--n-range", "1..4"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("PASS,PASS") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 12);  // 4 values of n x 3 families
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"spectrum", "--n", "2"}).code == 1);       // missing --set
    CHECK(run({"spectrum", "--n", "0", "--set", "elem(1,0)"}).code == 1);
    CHECK(run({"check", "--n", "2", "--set", dense_expr, "--method", "theorem9"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
