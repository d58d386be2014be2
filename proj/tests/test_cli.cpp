#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = neargroup::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("neargroup_test_" + name)).string();
}

}  // namespace

TEST_CASE("construct then verify") {
    std::string path = temp_path("z4.json");
    CHECK(run({"construct", "--field", "5", "--out", path}).code == 0);
    Result v = run({"verify", "--input", path, "--oracle"});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS") != std::string::npos);
    Result j = run({"verify", "--input", path, "--json"});
    CHECK(j.code == 0);
    auto report = nlohmann::json::parse(j.out);
    CHECK(report["schema"] == "neargroup-report");
    CHECK(report["version"] == 1);
    CHECK(report["status"] == "pass");
    std::filesystem::remove(path);
}

TEST_CASE("verify reports failures with exit code 1") {
    std::string path = temp_path("bad.json");
    CHECK(run({"construct", "--field", "4", "--out", path}).code == 0);
    std::ifstream in(path);
    auto data = nlohmann::json::parse(in);
    in.close();
    data["matrices"]["lambda"][0][0][0] = nlohmann::json{{"order", 1}, {"coeffs", nlohmann::json::array({nlohmann::json::array({"7", "1"})})}};
    std::ofstream(path) << data.dump();
    Result v = run({"verify", "--input", path, "--json"});
    CHECK(v.code == 1);
    auto report = nlohmann::json::parse(v.out);
    CHECK(report["status"] == "fail");
    std::filesystem::remove(path);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run({"verify", "--input", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"search-pi", "--group", "Zq"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"construct", "--field", "6"}).code == 2);
    std::string path = temp_path("garbage.json");
    std::ofstream(path) << "{not json";
    CHECK(run({"verify", "--input", path}).code == 2);
    std::ofstream(path) << R"({"schema": "neargroup-data", "version": 1})";
    CHECK(run({"braidings", "--input", path}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("search-pi") {
    Result r = run({"search-pi", "--group", "Z6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 permutations") != std::string::npos);
    CHECK(run({"search-pi", "--group", "Z5"}).code == 1);
    CHECK(run({"search-pi", "--group", "Z2xZ2"}).code == 1);
    auto j = nlohmann::json::parse(run({"search-pi", "--group", "Z4", "--json"}).out);
    CHECK(j["count"] == 2);
}

TEST_CASE("build-field") {
    Result r = run({"build-field", "--group", "Z4", "--pi", "(g g^2 g^3)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Field axioms: hold") != std::string::npos);
    CHECK(run({"build-field", "--field", "9", "--json"}).code == 0);
    CHECK(run({"build-field", "--group", "Z4", "--pi", "(g g^2)"}).code == 1);
    CHECK(run({"build-field", "--group", "Z4"}).code == 2);
}

TEST_CASE("obstruction") {
    Result r = run({"obstruction", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Obstructed") != std::string::npos);
    CHECK(r.out.find("L^4 = -1") != std::string::npos);
    auto j = nlohmann::json::parse(run({"obstruction", "--k", "5", "--json"}).out);
    CHECK(j["obstructed"] == false);
    CHECK(run({"obstruction", "--k", "0"}).code == 2);
}

TEST_CASE("classify and braidings") {
    Result r = run({"classify", "--family", "Z2k1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Monoidal structures: 3") != std::string::npos);
    CHECK(r.out.find("3 braidings") != std::string::npos);
    std::string path = temp_path("z3.json");
    CHECK(run({"construct", "--group", "Z3", "--pi", "()", "--out", path}).code == 0);
    auto j = nlohmann::json::parse(run({"braidings", "--input", path, "--json"}).out);
    CHECK(j["braidings"].size() == 4);
    CHECK(j["braidings"][0].contains("sigma3_eps"));
    CHECK(j["braidings"][0].contains("twists"));
    CHECK(run({"classify", "--family", "Z5"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("fixtures") {
    std::filesystem::path dir = temp_path("fixtures");
    std::filesystem::create_directories(dir);
    CHECK(run({"fixtures", "--out", dir.string()}).code == 0);
    CHECK(std::filesystem::exists(dir / "Z4k3-0.json"));
    CHECK(run({"verify", "--input", (dir / "Z3k2-1.json").string()}).code == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("deterministic output") {
    CHECK(run({"classify", "--family", "Z3k2", "--json"}).out == run({"classify", "--family", "Z3k2", "--json"}).out);
}
