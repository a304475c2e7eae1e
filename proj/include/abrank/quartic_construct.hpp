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

#ifndef ABRANK_QUARTIC_CONSTRUCT_HPP
#define ABRANK_QUARTIC_CONSTRUCT_HPP

#include <array>
#include <optional>

#include "abrank/forged_point.hpp"
#include "abrank/kpoly.hpp"
#include "abrank/laurent.hpp"

namespace abrank {

/// lambda with monic minimal polynomial P(u) = u^4 + p u^3 + q u^2 + r u + s,
/// the Legendre curve y^2 = x(x - 1)(x - lambda) over K = Q(lambda), and the
/// genus one curve v^2 = P(u) over Q that supplies the seeds.
struct QuarticInput {
    Rational p, q, r, s;
    FieldPtr field;

    /// Throws std::invalid_argument if P is reducible over Q.
    static QuarticInput make(const Rational& p, const Rational& q, const Rational& r, const Rational& s);
    UniPoly P() const { return UniPoly{s, r, q, p, Rational(1)}; }
    NFElement lambda() const { return NFElement::generator(field); }
};

/// A rational point on v^2 = P(u).
struct QuarticSeedPoint {
    Rational u, v;
    friend bool operator==(const QuarticSeedPoint&, const QuarticSeedPoint&) = default;
};

/// e(u) v + f(u), a function on v^2 = P(u) written with v-degree <= 1.
struct VLinear {
    UniPoly e, f;
    Rational operator()(const Rational& u, const Rational& v) const { return e(u) * v + f(u); }
};

/// C(u, v) = sum_i coeffs[i] lambda^i with coeffs[i] linear in v.
struct LambdaCubic {
    VLinear coeffs[4];
    NFElement operator()(const FieldPtr& field, const Rational& u, const Rational& v) const;
};

struct QuarticABCD {
    VLinear A, B;
    LambdaCubic C;
    /// A B (A - B), reduced with v^2 = P(u).
    VLinear D;
};

QuarticABCD build_ABCD(const QuarticInput& input);

/// C^2 - (A - B lambda) = 0 in Q[u, v, lambda] / (v^2 - P(u), P(lambda)).
bool verify_quartic_identity(const QuarticInput& input);

/// Pole orders of A, B, A - B (and D) at the point at infinity of v^2 = P(u),
/// computed with u = 1/t and v a Laurent square root of P(1/t).
struct PoleProfile {
    int a = 0, b = 0, a_minus_b = 0, d = 0;
    Branch branch = Branch::Plus;  ///< sign of the t^-2 term of v
    /// The triple on the other branch, when determinable at the working precision.
    std::optional<std::array<int, 3>> other_branch;
};

/// Evaluates both branches and selects the one where A keeps its full pole
/// (no cancellation of the leading terms). Throws InternalError if the selected
/// branch gives an even pole order for D, std::domain_error "raise precision"
/// if neither branch is determinable.
PoleProfile pole_profile(const QuarticInput& input, int precision = kDefaultLaurentPrecision);

/// Laurent expansions of A, B, A - B on one branch.
struct BranchExpansion {
    LaurentSeries a, b, a_minus_b;
};
BranchExpansion expand_at_infinity(const QuarticInput& input, Branch branch, int precision = kDefaultLaurentPrecision);

/// Rational points (u, +-v) with u = n/d, |n|, d <= height. Throws for height < 1.
std::vector<QuarticSeedPoint> search_quartic_points(const QuarticInput& input, int height);

class QuarticConstruction {
   public:
    explicit QuarticConstruction(QuarticInput input);

    const QuarticInput& input() const noexcept { return input_; }
    const FieldPtr& field() const noexcept { return input_.field; }
    const EllipticCurve& curve() const noexcept { return curve_; }
    const QuarticABCD& abcd() const noexcept { return abcd_; }

    /// (A/B, C sqrt(A (A - B) / B^3)) at the seed. Throws std::invalid_argument
    /// if the seed is not on v^2 = P(u).
    ForgeOutcome forge(const QuarticSeedPoint& seed) const;
    std::vector<Params> candidates(int height) const;

   private:
    QuarticInput input_;
    EllipticCurve curve_;
    QuarticABCD abcd_;
};

inline ForgeOutcome forge_quartic_point(const QuarticConstruction& construction, const QuarticSeedPoint& seed) {
    return construction.forge(seed);
}

}  // namespace abrank

#endif  // ABRANK_QUARTIC_CONSTRUCT_HPP
