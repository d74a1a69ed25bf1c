#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "codeg/verify.hpp"

using namespace codeg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("compute: phi2_211b both methods match") {
    TempFile out("cli_compute.json");
    int rc = cli::run({"compute", "--group", "phi2_211b", "--p", "5", "--method", "both",
                       "--format", "json", "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("match") == true);
    CHECK(j.at("order") == 625);
    CHECK(j.at("reports").size() == 2);
    CHECK(j.at("reports")[0].at("cod") == nlohmann::json({1, 5, 125}));
    CHECK(j.at("reports")[1].at("cod") == nlohmann::json({1, 5, 125}));
    CHECK(j.at("expected") == nlohmann::json({1, 5, 125}));
}

TEST_CASE("compute: abelian partition via the colon spec") {
    TempFile out("cli_abelian.json");
    int rc = cli::run({"compute", "--group", "abelian:2,1", "--p", "3", "--format", "json",
                       "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("reports")[0].at("cod") == nlohmann::json({1, 3, 9}));
}

TEST_CASE("compute: phi4_221c brute force only") {
    TempFile out("cli_f4c.json");
    int rc = cli::run({"compute", "--group", "phi4_221c", "--p", "5", "--method", "bruteforce",
                       "--format", "json", "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("reports").size() == 1);
    CHECK(j.at("reports")[0].at("method") == "bruteforce");
    CHECK(j.at("reports")[0].at("cod") == nlohmann::json({1, 5, 25}));
}

TEST_CASE("compute: user presentation from the shipped example file") {
    TempFile out("cli_user.json");
    int rc = cli::run({"compute", "--group",
                       std::string("user_json:") + CODEG_DATA_DIR + "/groups/heisenberg_f9_p3.json",
                       "--method", "both", "--format", "json", "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("match") == true);
    CHECK(j.at("reports")[0].at("cod") == nlohmann::json({1, 3, 27}));
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(cli::run({"compute", "--group", "nonsense", "--p", "5"}) == 2);
    CHECK(cli::run({"compute", "--group", "heisenberg", "--p", "4"}) == 2);
    CHECK(cli::run({"compute"}) == 2);                      // missing required option
    CHECK(cli::run({"verify", "nosuchsuite"}) == 2);        // bad suite name
    CHECK(cli::run({"compute", "--group", "phi2_31", "--p", "3"}) == 2);  // phi at p = 3
    CHECK(cli::run({"chartab", "--group", "heisenberg", "--p", "3", "--out",
                    "/no/such/dir/x.json"}) == 2);
}

TEST_CASE("verify p3 passes and exits 0") {
    TempFile out("cli_p3.json");
    int rc = cli::run({"verify", "p3", "--format", "json", "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("overall") == "pass");
    CHECK(j.at("schema_version") == 1);
    // 2 groups x 3 default primes
    CHECK(j.at("records").size() == 6);
    for (const auto& rec : j.at("records")) CHECK(rec.at("status") == "pass");
}

TEST_CASE("verify p4 includes skipped documentation rows, never pass") {
    TempFile out("cli_p4.json");
    int rc = cli::run({"verify", "p4", "--primes", "5", "--format", "json", "--out", out.path});
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    int skipped = 0, passed = 0;
    for (const auto& rec : j.at("records")) {
        if (rec.at("status") == "skipped") {
            ++skipped;
            CHECK(rec.at("group") == "");
        }
        if (rec.at("status") == "pass") ++passed;
    }
    CHECK(passed == 2);   // phi2_31, phi2_211b
    CHECK(skipped == 7);  // the documented rows without presentations
}

TEST_CASE("verify output is byte-identical across runs with the same seed") {
    TempFile out1("cli_det1.json");
    TempFile out2("cli_det2.json");
    CHECK(cli::run({"verify", "p3", "--seed", "7", "--format", "json", "--out", out1.path}) == 0);
    CHECK(cli::run({"verify", "p3", "--seed", "7", "--format", "json", "--out", out2.path}) == 0);
    CHECK(slurp(out1.path) == slurp(out2.path));
}

TEST_CASE("verification mismatch maps to exit code 1") {
    VerificationResult r;
    r.suite = "p3";
    VerificationRecord rec;
    rec.status = RecordStatus::mismatch;
    r.records.push_back(rec);
    CHECK(r.exit_code() == 1);
    CHECK(verification_to_json(r).at("overall") == "mismatch");
    r.records[0].status = RecordStatus::skipped;
    CHECK(r.exit_code() == 0);  // skipped is not a failure, but never a pass either
    CHECK(verification_to_json(r).at("records")[0].at("status") == "skipped");
}

TEST_CASE("chartab export: Heisenberg(3) has 11 rows, C_5 has 5 linear rows") {
    TempFile out("cli_chartab.json");
    CHECK(cli::run({"chartab", "--group", "heisenberg", "--p", "3", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j.at("classes").at("count") == 11);
    CHECK(j.at("rows").size() == 11);
    CHECK(j.at("dixon_prime") == 13);

    TempFile out5("cli_chartab5.json");
    CHECK(cli::run({"chartab", "--group", "abelian:1", "--p", "5", "--out", out5.path}) == 0);
    auto j5 = nlohmann::json::parse(slurp(out5.path));
    CHECK(j5.at("rows").size() == 5);
    for (const auto& row : j5.at("rows")) CHECK(row.at("degree") == 1);
}

TEST_CASE("chartab export: phi2_211b degree multiset {1 x 125, 5 x 20}") {
    TempFile out("cli_chartab211b.json");
    CHECK(cli::run({"chartab", "--group", "phi2_211b", "--p", "5", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    int ones = 0, fives = 0;
    for (const auto& row : j.at("rows")) {
        if (row.at("degree") == 1) ++ones;
        if (row.at("degree") == 5) ++fives;
    }
    CHECK(ones == 125);
    CHECK(fives == 20);
}

TEST_CASE("list: catalog in json and markdown") {
    TempFile out("cli_list.json");
    CHECK(cli::run({"list", "--format", "json", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    bool has_phi2_31 = false, has_doc_row = false, has_heisenberg = false;
    for (const auto& e : j.at("catalog")) {
        if (e.at("name") == "phi2(31)" && e.at("constructible") == true) has_phi2_31 = true;
        if (e.at("constructible") == false) has_doc_row = true;
        if (e.at("name") == "heisenberg") has_heisenberg = true;
    }
    CHECK(has_phi2_31);
    CHECK(has_doc_row);
    CHECK(has_heisenberg);

    TempFile md("cli_list.md");
    CHECK(cli::run({"list", "--out", md.path}) == 0);
    CHECK(slurp(md.path).find("| name |") == 0);
}

TEST_CASE("order guard flag blocks oversized groups with exit 2") {
    CHECK(cli::run({"compute", "--group", "phi2_31", "--p", "5", "--order-guard", "100"}) == 2);
}
