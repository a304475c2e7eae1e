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

#ifndef ABRANK_CERTIFICATE_HPP
#define ABRANK_CERTIFICATE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abrank/search.hpp"

namespace abrank {

/// A specialization that did not make it into the certificate, and why.
struct RejectedCandidate {
    Params params;
    std::string reason;
    std::optional<Integer> delta;
};

struct SearchInfo {
    int target = 0;
    int height = 0;
};

/// Points on one curve over pairwise distinct quadratic extensions K(sqrt(delta_i)),
/// each with a bounded torsion probe that found nothing. Pairwise distinct
/// fields plus non-torsion is what makes the points independent; the torsion
/// part is evidence up to the recorded bound, not a proof.
struct IndependenceCertificate {
    ordered_json curve;
    ConstructionKind construction = ConstructionKind::Cubic;
    int torsion_bound = kDefaultTorsionBound;
    std::optional<SearchInfo> search;
    std::vector<ForgedPoint> points;
    std::vector<RejectedCandidate> rejected;

    bool complete() const { return !search || static_cast<int>(points.size()) >= search->target; }
};

/// Sequential fold that decides acceptance in offer order: first point per
/// delta wins, K-points and torsion points are rejected with a reason.
class CertificateBuilder {
   public:
    CertificateBuilder(const EllipticCurve& curve, ordered_json curve_description, ConstructionKind kind,
                       int torsion_bound);

    /// Whether this delta already has an accepted point.
    bool has_delta(const Integer& delta) const { return seen_.count(delta) > 0; }
    /// Throws std::invalid_argument for an off-curve point. Computes the
    /// torsion verdict if absent or probed with another bound.
    void offer(ForgeOutcome outcome);
    std::size_t accepted() const { return cert_.points.size(); }
    IndependenceCertificate finish(std::optional<SearchInfo> search = std::nullopt) &&;

   private:
    const EllipticCurve& curve_;
    IndependenceCertificate cert_;
    std::set<Integer> seen_;
};

IndependenceCertificate assemble(const EllipticCurve& curve, ordered_json curve_description, ConstructionKind kind,
                                 std::vector<ForgedPoint> points, int torsion_bound = kDefaultTorsionBound);

struct SearchLimits {
    int height = 12;
    int torsion_bound = kDefaultTorsionBound;
    int jobs = 1;
};

/// Enumerates specializations by height until `target` points are accepted
/// or the candidates run out (then the certificate is partial). The result
/// does not depend on `limits.jobs`.
IndependenceCertificate search_and_forge(const Construction& construction, int target, const SearchLimits& limits);

ordered_json to_json(const IndependenceCertificate& cert);
/// Deterministic text: two-space indented JSON with a trailing newline.
std::string serialize(const IndependenceCertificate& cert);

struct VerificationReport {
    bool accepted = false;
    std::vector<std::string> problems;
};

/// Re-checks a serialized certificate using only its contents: curve
/// reconstruction, on-curve, squarefree and pairwise distinct deltas not
/// square in K, points genuinely outside E(K), torsion probes and the search
/// bookkeeping.
VerificationReport verify_certificate(const nlohmann::json& doc);

}  // namespace abrank

#endif  // ABRANK_CERTIFICATE_HPP
