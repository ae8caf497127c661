#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CYC_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze emits a full json report") {
    RunResult r = run_cli("analyze --set 12:0,1,5");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["doubling"]["size"] == 3);
    CHECK(doc["doubling"]["doubled_size"] == 6);
    CHECK(doc["vsds"]["hypothesis_holds"] == false);
    CHECK_FALSE(doc["witness_search"]["best"].is_null());

    RunResult r2 = run_cli("analyze --set 12:0,3,6,9");
    auto doc2 = nlohmann::json::parse(r2.out);
    CHECK(doc2["witness_search"]["best"]["variant"] == "dense_coset");

    // The boundary example: no witness at the full-scale constant.
    RunResult r3 = run_cli("analyze --set 130000:129999,0,1,10");
    CHECK(r3.exit_code == 0);
    auto doc3 = nlohmann::json::parse(r3.out);
    CHECK(doc3["doubling"]["doubled_size"] == 9);
    CHECK(doc3["witness_search"]["best"].is_null());
}

TEST_CASE("usage and parse failures exit 2") {
    CHECK(run_cli("analyze --set nonsense").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("sweep --n-max 30").exit_code == 2);
    CHECK(run_cli("lemmas --suite bogus").exit_code == 2);
    // Constants must stay on the 4C = 5C0 line when both are given.
    CHECK(run_cli("sweep --n-max 6 --const-c 10 --const-c0 10").exit_code ==
          2);
    CHECK(run_cli("sweep --n-max 6 --const-c 30000 --const-c0 24000")
              .exit_code == 0);
}

TEST_CASE("sweep subcommand reflects violations in the exit code") {
    RunResult clean = run_cli("sweep --n-max 9 --mode main");
    CHECK(clean.exit_code == 0);
    auto doc = nlohmann::json::parse(clean.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["violations"].empty());

    RunResult dirty = run_cli("sweep --n-max 9 --mode main --const-c 1");
    CHECK(dirty.exit_code == 1);
    auto bad = nlohmann::json::parse(dirty.out);
    CHECK_FALSE(bad["violations"].empty());
}

TEST_CASE("lemma suite subcommand") {
    RunResult r = run_cli("lemmas --suite triple --n-max 12");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["violations"].empty());
    CHECK(doc["hypothesis_hits"].get<long long>() > 0);
}

TEST_CASE("phi-scan subcommand and csv streaming") {
    CHECK(run_cli("phi-scan --from 100000 --to 100050").exit_code == 0);
    CHECK(run_cli("phi-scan --from 0 --to 40").exit_code == 1);

    RunResult csv =
        run_cli("phi-scan --from 100000 --to 100005 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,phi_num,phi_den,ok\n", 0) == 0);
    CHECK(csv.out.find("100001,") != std::string::npos);
}

TEST_CASE("rectify and bias subcommands") {
    RunResult r = run_cli("rectify --set 4:0,1,2");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verdict"]["rectifiable"] == false);
    CHECK(doc["interval"].is_null());

    RunResult r2 = run_cli("rectify --set 5:0,1,2");
    auto doc2 = nlohmann::json::parse(r2.out);
    CHECK(doc2["verdict"]["rectifiable"] == true);

    RunResult r3 = run_cli(
        "bias --set 100:0,1,2,3,4,5,6,7,8,9 --min-index 50");
    auto doc3 = nlohmann::json::parse(r3.out);
    CHECK(doc3["witness"]["coverage_ratio"] == 1.0);
}

TEST_CASE("extremal subcommand") {
    RunResult r = run_cli("extremal -n 11 --size-min 4 --size-max 4");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"][0]["min_doubling"] == 7);
}

TEST_CASE("identical invocations are byte-identical") {
    std::string cmd = "lemmas --suite energy --n-max 32 --trials 300 --seed 5";
    CHECK(run_cli(cmd).out == run_cli(cmd).out);
}

TEST_SUITE_END();
