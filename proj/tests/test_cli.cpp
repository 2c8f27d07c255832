#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dyckstat/search.hpp"
#include "dyckstat/witness_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(DYCKSTAT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "dyckstat_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("enumerate subcommand", "[cli]") {
    CHECK(run_cli("enumerate --k 2").output == "UUDD\nUDUD\n");
    CHECK(run_cli("enumerate --k 0").output == "\n");

    const RunResult json = run_cli("enumerate --k 3 --format json");
    CHECK(json.exit_code == 0);
    const auto arr = nlohmann::json::parse(json.output);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 5);
    CHECK(arr[0] == "UUUDDD");

    CHECK(run_cli("enumerate").exit_code == 2);
    CHECK(run_cli("enumerate --k 99").exit_code == 4); // above the enumeration ceiling
}

TEST_CASE("stat subcommand", "[cli]") {
    const RunResult row = run_cli("stat --k 4 --m 4 --format csv");
    CHECK(row.exit_code == 0);
    CHECK(row.output == "k,m,l,value\n4,4,0,1\n4,4,1,16\n4,4,2,36\n4,4,3,16\n4,4,4,1\n");

    const RunResult both = run_cli("stat --k 2 --m 2 --l 1 --method both --format csv");
    CHECK(both.exit_code == 0);
    CHECK(both.output == "k,m,l,value,value_brute,match\n2,2,1,4,4,match\n");

    const RunResult cell = run_cli("stat --k 2 --m 2 --l 1 --method both");
    CHECK(cell.output.find("match") != std::string::npos);

    const RunResult big = run_cli("stat --k 12 --m 12 --l 6 --format csv");
    CHECK(big.output.find("853776") != std::string::npos); // binom(12,6)^2

    const RunResult json = run_cli("stat --k 2 --format json");
    CHECK(json.exit_code == 0);
    const auto arr = nlohmann::json::parse(json.output);
    CHECK(arr.size() == 1 + 2 + 3 + 4 + 5); // full triangle for k = 2
    CHECK(arr[0]["value"] == "10");         // N_2(0,0) = (2k+1) * C_2

    CHECK(run_cli("stat --k 2 --m 5 --l 1").exit_code == 2);  // m > 2k
    CHECK(run_cli("stat --k 2 --l 1").exit_code == 2);        // --l without --m
    CHECK(run_cli("stat --k 20 --m 3 --l 1 --method both").exit_code == 4);
}

TEST_CASE("check subcommand", "[cli]") {
    CHECK(run_cli("check --suite corollary --max-k 6").exit_code == 0);
    CHECK(run_cli("check --suite rowsum --max-k 5").exit_code == 0);
    CHECK(run_cli("check --suite necessary --max-k 4").exit_code == 0);
    CHECK(run_cli("check --suite nonsense --max-k 3").exit_code == 2);
}

TEST_CASE("wreath show subcommand", "[cli]") {
    const RunResult show = run_cli("wreath show --n 5 --k 3 --perm 0,2,4,1,3");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("{0, 2, 4}") != std::string::npos);
    CHECK(show.output.find("{1, 3, 4}") != std::string::npos);

    const RunResult json = run_cli("wreath show --n 5 --k 3 --perm 0,2,4,1,3 --format json");
    const auto arr = nlohmann::json::parse(json.output);
    CHECK(arr.size() == 5);

    CHECK(run_cli("wreath show --n 5 --k 3 --perm 0,2,4,1").exit_code == 2);
    CHECK(run_cli("wreath show --n 5 --k 3 --perm 0,2,4,1,x").exit_code == 2);
    CHECK(run_cli("wreath show --n 5 --k 9 --perm 0,2,4,1,3").exit_code == 2);
}

TEST_CASE("wreath search and verify round-trip", "[cli]") {
    const auto file = temp_file("w3.json");
    std::filesystem::remove(file);

    const RunResult search =
        run_cli("wreath search --k 3 --variant strong --deterministic --out " + file.string());
    CHECK(search.exit_code == 0);
    REQUIRE(std::filesystem::exists(file));

    // the emitted file is accepted verbatim
    CHECK(run_cli("wreath verify --witness " + file.string()).exit_code == 0);

    // and parses as the documented schema
    const auto doc = dyckstat::read_witness_file(file.string());
    CHECK(doc.k == 3);
    CHECK(doc.variant == "strong");
    CHECK(doc.assignments.size() == 5);
    CHECK(doc.assignments.front().first == "UUUDDD");
}

TEST_CASE("wreath verify rejects corrupted witnesses", "[cli]") {
    using namespace dyckstat;
    const auto out = search_witness(2, WitnessVariant::Weak);
    REQUIRE(out.status == SearchStatus::Found);

    // swap two images inside one permutation
    WreathWitness corrupt = *out.witness;
    auto images = corrupt.assignments[0].second.images();
    std::swap(images[1], images[3]);
    corrupt.assignments[0].second = Permutation(images);

    const auto file = temp_file("corrupt.json");
    write_witness_file(file.string(), corrupt, WitnessVariant::Weak);
    const RunResult verify = run_cli("wreath verify --witness " + file.string());
    CHECK(verify.exit_code == 3);
    CHECK(verify.output.find("INVALID") != std::string::npos);

    const auto garbled = temp_file("garbled.json");
    std::ofstream(garbled) << "{not json";
    CHECK(run_cli("wreath verify --witness " + garbled.string()).exit_code == 2);
    CHECK(run_cli("wreath verify --witness /nonexistent/w.json").exit_code == 2);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("wreath").exit_code == 2);
    CHECK(run_cli("wreath search --k 2 --variant weak").exit_code == 2); // missing --out
}
