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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reference values are recomputed here from the defining formulas where possible.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "abrank/certificate.hpp"
#include "abrank/kummer.hpp"
#include "abrank/squarefree.hpp"
#include "abrank/verify_suites.hpp"

using namespace abrank;

namespace {

constexpr std::uint64_t kSeed = 0xab7a2c;

struct Gate {
    int failed = 0;

    // `body` returns true on success and may append detail.
    void criterion(int id, const std::string& title, double limit_s, const std::function<bool(std::ostream&)>& body) {
        std::ostringstream detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit_s > 0 && secs >= limit_s) {
            ok = false;
            detail << " over time limit";
        }
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << std::fixed
                  << std::setprecision(3) << secs << "s";
        if (limit_s > 0) std::cout << " < " << std::setprecision(0) << limit_s << "s";
        std::cout << "]";
        if (!detail.str().empty()) std::cout << " " << detail.str();
        std::cout << std::endl;
    }
};

Rational a0_closed(const QuadCurveInput& in) {
    const Rational &a = in.a, &b = in.b, &c = in.c, &d = in.d;
    return c * (-d * d * d - a * d * c * c + b * c * c * c);
}
Rational a1_closed(const QuadCurveInput& in) {
    const Rational &a = in.a, &b = in.b, &c = in.c, &d = in.d, m(in.m);
    return 2 * (-6 * a * a * d * c * c - 2 * a * d * d * d + 5 * a * b * c * c * c + m * c * c * c * c * d -
                9 * c * d * d * b);
}

bool all_verdicts_clean(const IndependenceCertificate& cert, const EllipticCurve& curve, int bound, std::ostream& d) {
    std::set<Integer> seen;
    for (const auto& p : cert.points) {
        if (!is_squarefree(p.delta) || !seen.insert(p.delta).second) {
            d << "bad delta " << p.delta.get_str();
            return false;
        }
        if (!on_curve(curve, p.point)) {
            d << "off-curve point";
            return false;
        }
        if (torsion_probe(curve, p.point, bound) != TorsionVerdict::none_up_to(bound)) {
            d << "torsion verdict";
            return false;
        }
    }
    return true;
}

// Every single-field corruption of every point must be rejected.
bool corruption_rejected(const nlohmann::json& good, std::ostream& d) {
    auto reject = [](const nlohmann::json& j) { return !verify_certificate(j).accepted; };
    auto bump = [](nlohmann::json& c) { c = to_string(parse_rational(c.get<std::string>()) + 1); };
    for (std::size_t i = 0; i < good["points"].size(); ++i) {
        auto x = good;
        bump(x["points"][i]["x"]["base"][0]);
        auto y = good;
        bump(y["points"][i]["y"]["radical"][0]);
        auto neg = good;
        for (auto& c : neg["points"][i]["y"]["radical"]) c = to_string(-parse_rational(c.get<std::string>()));
        auto delta = good;
        delta["points"][i]["delta"] = integer_json(-parse_integer_json(good["points"][i]["delta"]));
        auto verdict = good;
        verdict["points"][i]["verdict"] = "TorsionOrder(7)";
        auto bound = good;
        bound["points"][i]["verdict"] = "NoTorsionUpTo(23)";
        if (!(reject(x) && reject(y) && reject(neg) && reject(delta) && reject(verdict) && reject(bound))) {
            d << "corruption of point " << i << " accepted";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    Gate gate;

    gate.criterion(1, "cubic identity on 100 random irreducible L, heights <= 10", 5, [](std::ostream& d) {
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 100; ++i) {
            const CubicInput in = random_cubic_input(rng, 10, 10);
            if (!verify_cubic_identity(in)) {
                d << "fails for a=" << to_string(in.a) << " b=" << to_string(in.b) << " c=" << to_string(in.c);
                return false;
            }
        }
        return true;
    });

    gate.criterion(2, "cubic golden run L = t^3 - 2, t0 = 1, 2, 3", 5, [](std::ostream& d) {
        const CubicConstruction cc(CubicInput::make(0, 0, 2));
        const Integer want[] = {Integer(-357), Integer(3), Integer(3741)};
        for (long t0 = 1; t0 <= 3; ++t0) {
            const auto out = cc.forge(Rational(t0));
            if (!out.forged()) return d << "skip at t0=" << t0, false;
            const ForgedPoint& p = out.point();
            const Rational l = Rational(t0 * t0 * t0 - 2), m = Rational(t0 * t0 * t0 * t0 + 16 * t0) / 4;
            if (p.point.x().base() != NFElement::from_rational(cc.field(), m / l))
                return d << "x mismatch at t0=" << t0 << ": " << p.point.x().to_string() << " vs " << to_string(m / l), false;
            if (p.delta != want[t0 - 1] || rational_squarefree_part(l * m * (m - l)) != p.delta)
                return d << "delta " << p.delta.get_str(), false;
            if (!on_curve(cc.curve(), p.point)) return d << "off curve", false;
            if (torsion_probe(cc.curve(), p.point, 24) != TorsionVerdict::none_up_to(24))
                return d << "torsion verdict", false;
        }
        const bool x1 = cc.forge(Rational(1)).point().point.x().base() ==
                        NFElement::from_rational(cc.field(), Rational(-17, 4));
        d << "x(1) = -17/4, deltas -357 3 3741";
        return x1;
    });

    gate.criterion(3, "quadratic suite: 50 random inputs plus worked instance", 30, [](std::ostream& d) {
        std::mt19937_64 rng(kSeed + 3);
        for (int i = 0; i < 50; ++i) {
            const QuadCurveInput in = random_quad_input(rng);
            const BiHomPoly q = build_Q(in);
            if (q.degree() != 22 || !check_functional_eq(q, in.m, 11)) return d << "Q shape", false;
            if (q.coeff(22) != a0_closed(in) || q.coeff(21) != a1_closed(in)) return d << "A0/A1", false;
        }
        const QuadCurveInput w{Integer(2), 1, 1, 1, 1};
        const TwistData data = twist_data(w);
        if (data.Q(1, 1) != -139928683) return d << "Q(1,1)", false;
        const Rational x = x_gamma(data, 1, 1);
        const Rational p = x * x * x + data.T2(1, 1) * x + data.S2(1, 1);
        if (p != Rational(-4825127, 24389) || data.T1(1, 1) * x + data.S1(1, 1) != 0) return d << "P_gamma", false;
        d << "Q(1,1) = -139928683, P_gamma(x_gamma) = -4825127/24389";
        return true;
    });

    gate.criterion(4, "quadratic end to end: target 5, height 12", 60, [](std::ostream& d) {
        const auto c = make_construction(QuadraticSpec{Integer(2), 1, 1, 1, 1});
        const auto cert = search_and_forge(*c, 5, {12, 24, 1});
        if (cert.points.size() != 5) return d << cert.points.size() << " points", false;
        if (!all_verdicts_clean(cert, c->curve(), 24, d)) return false;
        for (const auto& p : cert.points) d << p.delta.get_str() << " ";
        return true;
    });

    gate.criterion(5, "quartic identity on 100 random quartics, pole profile on 20", 60, [](std::ostream& d) {
        std::mt19937_64 rng(kSeed + 5);
        for (int i = 0; i < 100; ++i)
            if (!verify_quartic_identity(random_quartic_input(rng))) return d << "identity", false;
        for (int i = 0; i < 20; ++i) {
            const PoleProfile pp = pole_profile(random_quartic_input(rng));
            if (pp.a != 6 || pp.b != 5 || pp.a_minus_b != 6 || pp.d != 17)
                return d << "profile " << pp.a << "," << pp.b << "," << pp.a_minus_b, false;
        }
        return true;
    });

    gate.criterion(6, "quartic golden run P = Phi_5, seed (3, 11); u^4 + 1 skip", 5, [](std::ostream& d) {
        const QuarticConstruction qc(QuarticInput::make(1, 1, 1, 1));
        const auto& abcd = qc.abcd();
        if (abcd.A(3, 11) != 4040 || abcd.B(3, 11) != 3135) return d << "A/B", false;
        const auto out = qc.forge({3, 11});
        if (!out.forged()) return d << "skip", false;
        if (out.point().point.x().base() != NFElement::from_rational(qc.field(), Rational(808, 627)))
            return d << "x", false;
        if (!on_curve(qc.curve(), out.point().point)) return d << "off curve", false;
        const auto skip = QuarticConstruction(QuarticInput::make(0, 0, 0, 1)).forge({0, 1});
        if (skip.forged() || skip.skip().reason != "B(u,v) = 0") return d << "no B = 0 skip", false;
        return true;
    });

    gate.criterion(7, "genus g2 = g3 = 0, g4 = 1, Riemann-Hurwitz for 2 <= n <= 64", 1, [](std::ostream&) {
        bool ok = genus_formula(2) == 0 && genus_formula(3) == 0 && genus_formula(4) == 1;
        for (int n = 2; n <= 64; ++n) ok = ok && rh_check(n);
        return ok;
    });

    gate.criterion(8, "certificate integrity, corruption and determinism", 0, [](std::ostream& d) {
        const std::tuple<CurveSpec, int, int> runs[] = {
            {CubicSpec{0, 0, 2}, 3, 3},
            {QuadraticSpec{Integer(2), 1, 1, 1, 1}, 5, 12},
            {QuarticSpec{1, 1, 1, 1}, 2, 3},
            {QuadraticSpec{Integer(-1), 2, -3, 1, 5}, 4, 6},
            {CubicSpec{0, 0, 2}, 50, 2},  // partial
        };
        for (const auto& [spec, target, height] : runs) {
            const auto c = make_construction(spec);
            const std::string text = serialize(search_and_forge(*c, target, {height, 24, 1}));
            const auto doc = nlohmann::json::parse(text);
            const auto report = verify_certificate(doc);
            if (!report.accepted) return d << "rejected: " << report.problems.front(), false;
            if (!corruption_rejected(doc, d)) return false;
            for (int jobs : {1, 2, 4})
                if (serialize(search_and_forge(*c, target, {height, 24, jobs})) != text)
                    return d << "output differs with jobs=" << jobs, false;
        }
        d << "5 certificates";
        return true;
    });

    return gate.failed == 0 ? 0 : 1;
}
