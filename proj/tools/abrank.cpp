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

// Command-line front end. Machine-readable output goes to stdout (one JSON
// document, or JSON lines for verify suites); summaries go to stderr.
// Exit codes: 0 success, 1 invalid input or failed check, 2 partial result.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abrank/certificate.hpp"
#include "abrank/kummer.hpp"
#include "abrank/search.hpp"
#include "abrank/verify_suites.hpp"

namespace {

using namespace abrank;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPartial = 2;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

int cmd_verify_suite(const std::string& suite, int samples, const std::string& fault) {
    SuiteOptions opt;
    opt.samples = samples;
    if (!fault.empty()) {
        if (fault != "a1") throw std::invalid_argument("unknown fault '" + fault + "'");
        opt.corrupt_a1 = true;
    }
    const auto results = run_suite(suite, opt);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << to_json(r).dump() << "\n";
        if (!r.ok) {
            ++failed;
            std::cerr << "FAIL " << r.suite << "/" << r.check << " " << r.instance.dump() << " " << r.detail
                      << "\n";
        }
    }
    std::cerr << suite << ": " << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitInvalid;
}

int cmd_verify_certificate(const std::string& path) {
    const VerificationReport report = verify_certificate(read_json_file(path));
    ordered_json out;
    out["certificate"] = path;
    out["accepted"] = report.accepted;
    out["problems"] = report.problems;
    std::cout << out.dump() << "\n";
    for (const auto& p : report.problems) std::cerr << "problem: " << p << "\n";
    return report.accepted ? kExitOk : kExitInvalid;
}

int cmd_forge(const std::string& curve_path, int count, int height, int bound, const std::string& out_path,
              int jobs) {
    if (count < 1) throw std::invalid_argument("--count must be >= 1");
    if (height < 1) throw std::invalid_argument("--height must be >= 1");
    if (bound < 1) throw std::invalid_argument("--torsion-bound must be >= 1");
    const CurveSpec spec = parse_curve_spec(read_json_file(curve_path));
    const auto construction = make_construction(spec);
    const IndependenceCertificate cert = search_and_forge(*construction, count, {height, bound, jobs});
    const std::string text = serialize(cert);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
    std::cerr << to_string(cert.construction) << ": " << cert.points.size() << "/" << count << " points, "
              << cert.rejected.size() << " rejected candidates\n";
    return cert.complete() ? kExitOk : kExitPartial;
}

int cmd_genus(int n) {
    ordered_json out;
    out["n"] = n;
    out["genus"] = integer_json(genus_formula(n));
    out["riemann_hurwitz"] = rh_check(n);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_quartic_search(const std::string& poly, int height) {
    std::vector<Rational> coeffs;
    std::stringstream ss(poly);
    for (std::string item; std::getline(ss, item, ',');) coeffs.push_back(parse_rational(item));
    if (coeffs.size() != 4) throw std::invalid_argument("--poly expects four rationals p,q,r,s");
    const QuarticInput input = QuarticInput::make(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
    const auto seeds = search_quartic_points(input, height);
    ordered_json out;
    out["poly"] = rational_array(coeffs);
    out["height"] = height;
    out["points"] = ordered_json::array();
    for (const auto& s : seeds) out["points"].push_back(rational_array({s.u, s.v}));
    std::cout << out.dump() << "\n";
    std::cerr << seeds.size() << " points\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abrank: points of infinite rank over abelian extensions"};
    app.require_subcommand(1);

    std::string suite, cert_path, fault;
    int samples = 100;
    auto* verify = app.add_subcommand("verify", "run identity suites or check a certificate");
    auto* suite_opt = verify->add_option("--suite", suite, "quad, cubic, quartic, genus or all")
                          ->check(CLI::IsMember({"quad", "cubic", "quartic", "genus", "all"}));
    verify->add_option("--samples", samples, "random instances per suite")->check(CLI::PositiveNumber);
    auto* cert_opt = verify->add_option("--certificate", cert_path, "certificate JSON to re-check");
    verify->add_option("--inject-fault", fault, "negative control; 'a1' corrupts the A1 comparison")
        ->group("");
    suite_opt->excludes(cert_opt);

    std::string curve_path, out_path;
    int count = 5, height = 12, bound = kDefaultTorsionBound, jobs = 1;
    auto* forge = app.add_subcommand("forge", "search for points and write a certificate");
    forge->add_option("--curve", curve_path, "curve description JSON")->required();
    forge->add_option("--count", count, "target number of points");
    forge->add_option("--height", height, "specialization height bound");
    forge->add_option("--torsion-bound", bound, "torsion probe bound");
    forge->add_option("--out", out_path, "output path (stdout if omitted)");
    forge->add_option("--jobs", jobs, "worker threads; output does not depend on it")->check(CLI::PositiveNumber);

    int n = 0;
    auto* genus = app.add_subcommand("genus", "genus of the curve C_n");
    genus->add_option("--n", n, "number of elliptic curves")->required();

    std::string poly;
    int qheight = 3;
    auto* qsearch = app.add_subcommand("quartic-search", "rational points on v^2 = u^4 + p u^3 + q u^2 + r u + s");
    qsearch->add_option("--poly", poly, "p,q,r,s")->required();
    qsearch->add_option("--height", qheight, "height bound for u")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*verify) {
            if (!cert_path.empty()) return cmd_verify_certificate(cert_path);
            if (suite.empty()) throw std::invalid_argument("verify needs --suite or --certificate");
            return cmd_verify_suite(suite, samples, fault);
        }
        if (*forge) return cmd_forge(curve_path, count, height, bound, out_path, jobs);
        if (*genus) return cmd_genus(n);
        if (*qsearch) return cmd_quartic_search(poly, qheight);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
