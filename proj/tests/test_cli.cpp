#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hodgemod/document.hpp"
#include "hodgemod/moduli.hpp"

using namespace hodgemod;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

std::string binary_path() {
    const char* env = std::getenv("HODGEMOD_BIN");
    REQUIRE_MESSAGE(env != nullptr, "HODGEMOD_BIN must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hodgemod_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("compute emits a parseable document that matches the library") {
    const RunResult r = run_cli("compute --rank 2 --degree 1 --genus 2 --fixed-determinant");
    REQUIRE(r.exit_code == 0);
    const OutputDocument doc = parse_document_json(r.output);

    SeriesCache cache;
    const HodgeReport expected = report(2, 1, 2, Variant::fixed_determinant, cache);
    CHECK(to_report(doc) == expected);
}

TEST_CASE("exit code 2 on invalid input") {
    const RunResult coprime = run_cli("compute --rank 2 --degree 2 --genus 2");
    CHECK(coprime.exit_code == 2);
    CHECK(coprime.output.find("coprime") != std::string::npos);

    CHECK(run_cli("compute --rank 2 --degree 1 --genus 1").exit_code == 2);
    CHECK(run_cli("compute --rank 0 --degree 1 --genus 2").exit_code == 2);
    CHECK(run_cli("compute --rank 2 --degree 1 --genus 2 --cap 3").exit_code == 2);
    // unparsable flags are invalid input too
    CHECK(run_cli("compute --rank 2 --degree 1").exit_code == 2);
}

TEST_CASE("text format matches the golden table") {
    const RunResult r =
        run_cli("compute --rank 2 --degree 1 --genus 2 --fixed-determinant --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output ==
          "h[0][0] = 1\n"
          "h[1][1] = 1\n"
          "h[1][2] = 2\n"
          "h[2][1] = 2\n"
          "h[2][2] = 1\n"
          "h[3][3] = 1\n"
          "betti = [1, 0, 1, 4, 1, 0, 1]\n"
          "chi = 1 + t - t^2 - t^3\n");
}

TEST_CASE("jacobian document") {
    const RunResult r = run_cli("compute --rank 1 --degree 0 --genus 3 --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("betti = [1, 6, 15, 20, 15, 6, 1]") != std::string::npos);
}

TEST_CASE("chi subcommand") {
    const RunResult r = run_cli("chi --rank 3 --degree 1 --genus 2");
    REQUIRE(r.exit_code == 0);
    // coefficients of (1+t)(1-t^2)^2(1+t^3)
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("chi_coeffs").get<std::vector<std::string>>() ==
          std::vector<std::string>{"1", "1", "-2", "-1", "2", "-1", "-2", "1", "1"});
    CHECK(j.at("query").at("variant") == "fixed_determinant");
    CHECK(!j.contains("hodge_terms"));

    const RunResult zero = run_cli("chi --rank 2 --degree 1 --genus 2 --full-space --format text");
    REQUIRE(zero.exit_code == 0);
    CHECK(zero.output == "chi = 0\n");
}

TEST_CASE("betti subcommand") {
    const RunResult r =
        run_cli("betti --rank 2 --degree 1 --genus 2 --fixed-determinant --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "betti = [1, 0, 1, 4, 1, 0, 1]\n");
}

TEST_CASE("verify subcommand") {
    const RunResult r = run_cli("verify --max-rank 2 --max-genus 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find("n=2 d=1 g=2") != std::string::npos);
}

TEST_CASE("cap override is recorded") {
    const RunResult r = run_cli("compute --rank 2 --degree 1 --genus 2 --cap 16");
    REQUIRE(r.exit_code == 0);
    const OutputDocument doc = parse_document_json(r.output);
    CHECK(doc.cap_used == 16);

    const RunResult base = run_cli("compute --rank 2 --degree 1 --genus 2");
    const OutputDocument base_doc = parse_document_json(base.output);
    CHECK(base_doc.cap_used == default_cap(2, 2));
    CHECK(doc.hodge_terms == base_doc.hodge_terms);
}

TEST_CASE("--out writes the document to a file") {
    TempDir tmp;
    const auto out_file = tmp.path / "doc.json";
    const RunResult r = run_cli("compute --rank 2 --degree 1 --genus 2 --out " +
                                out_file.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(out_file);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(parse_document_json(content).n == 2);
}

TEST_CASE("cache directory is used and corruption is survived") {
    TempDir tmp;
    const std::string flags =
        "compute --rank 2 --degree 1 --genus 2 --cache-dir " + tmp.path.string();

    const RunResult first = run_cli(flags);
    REQUIRE(first.exit_code == 0);

    // cache files landed
    bool found = false;
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        if (entry.path().extension() == ".json") found = true;
    }
    CHECK(found);

    // second run, warm cache: identical document
    const RunResult second = run_cli(flags);
    REQUIRE(second.exit_code == 0);
    CHECK(second.output == first.output);

    // corrupt every cache file; the run must still succeed and agree
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "garbage";
    }
    const RunResult third = run_cli(flags);
    REQUIRE(third.exit_code == 0);
    CHECK(third.output == first.output);
}

TEST_CASE("HODGE_CACHE_DIR environment variable") {
    TempDir tmp;
    const std::string cmd = "HODGE_CACHE_DIR=" + tmp.path.string() + " " + binary_path() +
                            " compute --rank 2 --degree 1 --genus 2 > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    bool found = false;
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        if (entry.path().extension() == ".json") found = true;
    }
    CHECK(found);
}
