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

#include "abrank/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace abrank {

namespace {

constexpr const char* kFormat = "abrank-certificate/1";
constexpr std::size_t kChunk = 16;

// Sign of the last nonzero coordinate of y, looking at the sqrt(delta) part
// first. Certificates store the representative of {P, -P} where it is positive.
int y_sign(const CurvePoint& p) {
    for (const NFElement* part : {&p.y().radical(), &p.y().base()}) {
        const auto& c = part->coords();
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != 0) return sgn(c[i]);
    }
    return 0;
}

}  // namespace

CertificateBuilder::CertificateBuilder(const EllipticCurve& curve, ordered_json curve_description,
                                       ConstructionKind kind, int torsion_bound)
    : curve_(curve) {
    if (torsion_bound < 1) throw std::invalid_argument("torsion bound must be >= 1");
    cert_.curve = std::move(curve_description);
    cert_.construction = kind;
    cert_.torsion_bound = torsion_bound;
}

void CertificateBuilder::offer(ForgeOutcome outcome) {
    if (!outcome.forged()) {
        cert_.rejected.push_back({std::move(outcome.params), outcome.skip().reason, std::nullopt});
        return;
    }
    ForgedPoint& fp = outcome.point();
    if (!on_curve(curve_, fp.point)) throw std::invalid_argument("off-curve point offered: " + to_string(fp.params));
    if (!fp.verdict || (!fp.verdict->torsion && fp.verdict->bound != cert_.torsion_bound) ||
        (fp.verdict->torsion && fp.verdict->order > cert_.torsion_bound))
        fp.verdict = torsion_probe(curve_, fp.point, cert_.torsion_bound);
    if (fp.verdict->torsion) {
        cert_.rejected.push_back({std::move(fp.params), fp.verdict->to_string(), fp.delta});
        return;
    }
    if (fp.over_base_field || fp.delta == 1) {
        cert_.rejected.push_back({std::move(fp.params), "defined over base field", fp.delta});
        return;
    }
    if (has_delta(fp.delta)) {
        cert_.rejected.push_back({std::move(fp.params), "duplicate field", fp.delta});
        return;
    }
    if (y_sign(fp.point) < 0) fp.point = -fp.point;
    seen_.insert(fp.delta);
    cert_.points.push_back(std::move(fp));
}

IndependenceCertificate CertificateBuilder::finish(std::optional<SearchInfo> search) && {
    cert_.search = search;
    return std::move(cert_);
}

IndependenceCertificate assemble(const EllipticCurve& curve, ordered_json curve_description, ConstructionKind kind,
                                 std::vector<ForgedPoint> points, int torsion_bound) {
    CertificateBuilder builder(curve, std::move(curve_description), kind, torsion_bound);
    for (auto& p : points) {
        Params params = p.params;
        builder.offer(ForgeOutcome{std::move(params), std::move(p)});
    }
    return std::move(builder).finish();
}

IndependenceCertificate search_and_forge(const Construction& construction, int target, const SearchLimits& limits) {
    if (target < 1) throw std::invalid_argument("target must be >= 1");
    const EllipticCurve& curve = construction.curve();
    CertificateBuilder builder(curve, construction.describe(), construction.kind(), limits.torsion_bound);
    const std::vector<Params> candidates = construction.candidates(limits.height);
    const auto want = static_cast<std::size_t>(target);

    for (std::size_t start = 0; start < candidates.size() && builder.accepted() < want; start += kChunk) {
        const std::size_t len = std::min(kChunk, candidates.size() - start);
        std::vector<ForgeOutcome> outcomes =
            forge_batch(construction, std::span<const Params>(candidates).subspan(start, len), limits.jobs);

        // Probe in parallel ahead of the sequential fold, which then only reads verdicts.
        std::vector<ForgedPoint*> to_probe;
        for (auto& o : outcomes)
            if (o.forged()) to_probe.push_back(&o.point());
        probe_batch(curve, to_probe, limits.torsion_bound, limits.jobs);

        for (auto& o : outcomes) {
            if (builder.accepted() >= want) break;
            builder.offer(std::move(o));
        }
    }
    return std::move(builder).finish(SearchInfo{target, limits.height});
}

namespace {

ordered_json quadext_json(const QuadExtElement& z) {
    ordered_json out;
    out["base"] = rational_array(z.base().coords());
    out["radical"] = rational_array(z.radical().coords());
    return out;
}

ordered_json params_json(const Params& params) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : params) out[k] = to_string(v);
    return out;
}

}  // namespace

ordered_json to_json(const IndependenceCertificate& cert) {
    ordered_json out;
    out["format"] = kFormat;
    out["curve"] = cert.curve;
    out["construction"] = to_string(cert.construction);
    out["torsion_bound"] = cert.torsion_bound;
    if (cert.search) {
        ordered_json s;
        s["target"] = cert.search->target;
        s["height"] = cert.search->height;
        s["status"] = cert.complete() ? "complete" : "partial";
        s["shortfall"] = std::max(0, cert.search->target - static_cast<int>(cert.points.size()));
        out["search"] = std::move(s);
    }
    ordered_json points = ordered_json::array();
    for (const auto& p : cert.points) {
        ordered_json j;
        j["x"] = quadext_json(p.point.x());
        j["y"] = quadext_json(p.point.y());
        j["delta"] = integer_json(p.delta);
        j["params"] = params_json(p.params);
        j["verdict"] = p.verdict ? p.verdict->to_string() : "unprobed";
        j["factorization"] = to_string(p.factor_status);
        points.push_back(std::move(j));
    }
    out["points"] = std::move(points);
    ordered_json rejected = ordered_json::array();
    for (const auto& r : cert.rejected) {
        ordered_json j;
        j["params"] = params_json(r.params);
        j["reason"] = r.reason;
        if (r.delta) j["delta"] = integer_json(*r.delta);
        rejected.push_back(std::move(j));
    }
    out["rejected"] = std::move(rejected);
    return out;
}

std::string serialize(const IndependenceCertificate& cert) { return to_json(cert).dump(2) + "\n"; }

namespace {

QuadExtElement parse_quadext(const nlohmann::json& j, const FieldPtr& k, const Integer& delta) {
    if (!j.is_object() || !j.contains("base") || !j.contains("radical"))
        throw std::invalid_argument("coordinate needs 'base' and 'radical'");
    return QuadExtElement(NFElement(k, parse_rational_array(j.at("base"))),
                          NFElement(k, parse_rational_array(j.at("radical"))), delta);
}

}  // namespace

VerificationReport verify_certificate(const nlohmann::json& doc) {
    VerificationReport report;
    auto fail = [&](std::string msg) { report.problems.push_back(std::move(msg)); };

    try {
        if (!doc.is_object() || doc.value("format", "") != kFormat) {
            fail("not an abrank certificate");
            return report;
        }
        const CurveSpec spec = parse_curve_spec(doc.at("curve"));
        const FieldPtr k = field_from_spec(spec);
        const EllipticCurve curve = curve_from_spec(spec);
        if (doc.at("curve").contains("minpoly") &&
            UniPoly(parse_rational_array(doc.at("curve").at("minpoly"))) != k->minpoly())
            fail("recorded minimal polynomial does not match the curve description");
        if (doc.at("construction").get<std::string>() != to_string(kind_of(spec)))
            fail("construction does not match the curve kind");
        const int bound = doc.at("torsion_bound").get<int>();
        if (bound < 1) fail("torsion bound must be >= 1");

        std::set<Integer> deltas;
        const auto& points = doc.at("points");
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& pj = points[i];
            const std::string where = "point " + std::to_string(i) + ": ";
            try {
                const Integer delta = parse_integer_json(pj.at("delta"));
                const auto dec = squarefree_decompose(delta);
                if (dec.root != 1) fail(where + "delta " + delta.get_str() + " is not squarefree");
                if (delta == 1) fail(where + "delta = 1 gives no extension");
                if (delta_is_square_in(*k, delta).value_or(false))
                    fail(where + "delta " + delta.get_str() + " is a square in the base field");
                if (!deltas.insert(delta).second) fail(where + "duplicate delta " + delta.get_str());
                if (pj.at("factorization").get<std::string>() != to_string(dec.status))
                    fail(where + "factorization status does not match");
                for (const auto& [name, value] : pj.at("params").items()) {
                    if (!value.is_string()) fail(where + "parameter '" + name + "' is not a rational string");
                    else (void)parse_rational(value.get<std::string>());
                }

                const CurvePoint p(parse_quadext(pj.at("x"), k, delta), parse_quadext(pj.at("y"), k, delta));
                if (p.x().in_base_field() && p.y().in_base_field()) fail(where + "point is defined over the base field");
                if (y_sign(p) < 0) fail(where + "y is not in canonical sign");
                if (!on_curve(curve, p)) {
                    fail(where + "not on the curve");
                    continue;
                }
                const TorsionVerdict recorded = TorsionVerdict::parse(pj.at("verdict").get<std::string>());
                const TorsionVerdict actual = torsion_probe(curve, p, bound);
                if (!(recorded == actual) || recorded.to_string() != actual.to_string())
                    fail(where + "verdict " + recorded.to_string() + " but probe gives " + actual.to_string());
                if (actual.torsion) fail(where + "torsion point in certificate");
            } catch (const std::exception& e) {
                fail(where + e.what());
            }
        }

        if (doc.contains("search")) {
            const auto& s = doc.at("search");
            const int target = s.at("target").get<int>();
            const auto n = static_cast<int>(points.size());
            const std::string status = s.at("status").get<std::string>();
            if (n > target) fail("more points than the search target");
            if ((status == "complete") != (n >= target)) fail("search status '" + status + "' inconsistent with points");
            if (s.at("shortfall").get<int>() != std::max(0, target - n)) fail("search shortfall inconsistent");
        }
        for (const auto& r : doc.at("rejected")) {
            if (!r.contains("params") || !r.contains("reason") || !r.at("reason").is_string())
                fail("malformed rejected entry");
        }
    } catch (const std::exception& e) {
        fail(std::string("malformed certificate: ") + e.what());
    }
    report.accepted = report.problems.empty();
    return report;
}

}  // namespace abrank
