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

#ifndef ABRANK_FORGED_POINT_HPP
#define ABRANK_FORGED_POINT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abrank/elliptic.hpp"
#include "abrank/squarefree.hpp"

namespace abrank {

enum class ConstructionKind { Quadratic, Cubic, Quartic };

const char* to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& text);

/// Named specialization parameters in a fixed order, e.g. {("u", 1), ("v", 1)} or {("t0", 3)}.
using Params = std::vector<std::pair<std::string, Rational>>;

std::string to_string(const Params& params);

/// A point produced by one of the constructions: it lies on the user's
/// curve and is defined over K(sqrt(delta)).
struct ForgedPoint {
    CurvePoint point;
    Integer delta;
    ConstructionKind construction;
    Params params;
    FactorStatus factor_status = FactorStatus::Verified;
    /// delta = 1, or delta is a square in K: the point lies in E(K).
    bool over_base_field = false;
    std::optional<TorsionVerdict> verdict;
};

/// A specialization the construction cannot use, with a machine-readable reason.
struct Skip {
    std::string reason;
};

struct ForgeOutcome {
    Params params;
    std::variant<ForgedPoint, Skip> result;

    bool forged() const { return std::holds_alternative<ForgedPoint>(result); }
    const ForgedPoint& point() const { return std::get<ForgedPoint>(result); }
    ForgedPoint& point() { return std::get<ForgedPoint>(result); }
    const Skip& skip() const { return std::get<Skip>(result); }
};

/// Candidate t-values n/d with 1 <= d <= height, |n| <= height, gcd(n, d) = 1,
/// ordered by d, then n = 0, 1, ..., height, -1, ..., -height.
std::vector<Rational> rationals_up_to_height(int height);

}  // namespace abrank

#endif  // ABRANK_FORGED_POINT_HPP
