/*
   Copyright 2026 The abrank Authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("abrank_cli_test_" + std::to_string(::getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

fs::path workdir() {
    static const TempDir dir;
    return dir.path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Result cli(const std::string& args) {
    const fs::path out = workdir() / "stdout.txt", err = workdir() / "stderr.txt";
    const std::string cmd = std::string(ABRANK_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = workdir() / name;
    std::ofstream(p) << text;
    return p;
}

const std::string kCubic = R"({"kind": "cubic", "a": "0/1", "b": "0/1", "c": "2/1"})";
const std::string kQuad = R"({"kind": "quadratic", "m": 2, "a": "1/1", "b": "1/1", "c": "1/1", "d": "1/1"})";

}  // namespace

TEST_CASE("genus") {
    auto r = cli("genus --n 4");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["genus"] == 1);
    CHECK(j["riemann_hurwitz"] == true);
    r = cli("genus --n 5");
    CHECK(nlohmann::json::parse(r.out)["genus"] == 5);
    CHECK(cli("genus --n 1").code == 1);
}

TEST_CASE("verify suites") {
    auto r = cli("verify --suite cubic --samples 100");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    int n = 0;
    for (std::string line; std::getline(lines, line); ++n) CHECK(nlohmann::json::parse(line)["ok"] == true);
    CHECK(n == 300);
    CHECK(cli("verify --suite genus").code == 0);
    r = cli("verify --suite quad --samples 3 --inject-fault a1");
    CHECK(r.code == 1);
    CHECK(r.err.find("\"kind\":\"quadratic\"") != std::string::npos);
    CHECK(cli("verify --suite nonsense").code == 1);
}

TEST_CASE("forge and verify a cubic certificate") {
    const auto curve = write("cubic.json", kCubic);
    const auto out = workdir() / "cubic_cert.json";
    auto r = cli("forge --curve " + curve.string() + " --count 3 --height 3 --torsion-bound 24 --out " + out.string());
    CHECK(r.code == 0);
    const auto cert = nlohmann::json::parse(slurp(out));
    REQUIRE(cert["points"].size() == 3);
    CHECK(cert["points"][0]["delta"] == -357);
    CHECK(cert["points"][1]["delta"] == 3);
    CHECK(cert["points"][2]["delta"] == 3741);
    CHECK(cli("verify --certificate " + out.string()).code == 0);

    auto tampered = cert;
    tampered["points"][1]["delta"] = 5;
    const auto bad = write("tampered.json", tampered.dump());
    r = cli("verify --certificate " + bad.string());
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["accepted"] == false);
}

TEST_CASE("forge exit codes") {
    const auto quad = write("quad.json", kQuad);
    CHECK(cli("forge --curve " + quad.string() + " --count 5 --height 12 --out -").code == 0);

    const auto cd0 = write("cd0.json", R"({"kind": "quadratic", "m": 2, "a": "1/1", "b": "1/1", "c": "0/1", "d": "0/1"})");
    const auto out = workdir() / "cd0_cert.json";
    CHECK(cli("forge --curve " + cd0.string() + " --count 3 --height 6 --out " + out.string()).code == 0);
    CHECK(cli("verify --certificate " + out.string()).code == 0);

    const auto m4 = write("m4.json", R"({"kind": "quadratic", "m": 4, "a": "1", "b": "1", "c": "1", "d": "1"})");
    CHECK(cli("forge --curve " + m4.string()).code == 1);

    const auto j0 = write("j0.json", R"({"kind": "quadratic", "m": 2, "a": "0", "b": "1", "c": "0", "d": "1"})");
    auto r = cli("forge --curve " + j0.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("hypothesis") != std::string::npos);

    const auto broken = write("broken.json", "{\"kind\": \"cubic\", \"a\": ");
    CHECK(cli("forge --curve " + broken.string()).code == 1);
    const auto reducible = write("reducible.json", R"({"kind": "cubic", "a": "0", "b": "0", "c": "8"})");
    CHECK(cli("forge --curve " + reducible.string()).code == 1);
    CHECK(cli("forge --curve " + (workdir() / "missing.json").string()).code == 1);

    const auto cubic = write("cubic.json", kCubic);
    r = cli("forge --curve " + cubic.string() + " --count 50 --height 2");
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out)["search"]["status"] == "partial");
}

TEST_CASE("forge output does not depend on --jobs") {
    const auto quad = write("quad.json", kQuad);
    const auto a = cli("forge --curve " + quad.string() + " --count 6 --height 12 --jobs 1");
    const auto b = cli("forge --curve " + quad.string() + " --count 6 --height 12 --jobs 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("quartic-search") {
    auto r = cli("quartic-search --poly 1,1,1,1 --height 3");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& p : j["points"]) found = found || (p[0] == "3/1" && p[1] == "11/1");
    CHECK(found);
    CHECK(cli("quartic-search --poly 1,1,1 --height 3").code == 1);
    CHECK(cli("quartic-search --poly 0,0,0,-1 --height 3").code == 1);
}
