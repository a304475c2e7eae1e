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

#ifndef ABRANK_QUAD_CONSTRUCT_HPP
#define ABRANK_QUAD_CONSTRUCT_HPP

#include "abrank/bihompoly.hpp"
#include "abrank/forged_point.hpp"
#include "abrank/number_field.hpp"

namespace abrank {

/// E: y^2 = x^3 + alpha x + beta over K = Q(sqrt(m)) with alpha = a + c sqrt(m),
/// beta = b + d sqrt(m).
struct QuadCurveInput {
    Integer m;
    Rational a, b, c, d;

    FieldPtr field() const { return NumberField::quadratic(m); }
    NFElement alpha(const FieldPtr& k) const { return NFElement(k, {a, c}); }
    NFElement beta(const FieldPtr& k) const { return NFElement(k, {b, d}); }
};

/// Checks m squarefree and != 1, a nonsingular curve and j not in {0, 1728}.
/// Throws std::invalid_argument / std::domain_error with the violated hypothesis.
void validate_quad_curve(const QuadCurveInput& input);

/// Result of rescaling (alpha, beta) -> (gamma^4 alpha, gamma^6 beta) so that both
/// have a nonzero sqrt(m) part. gamma = 1 when the input already qualifies.
struct NormalizedQuadInput {
    QuadCurveInput input;
    NFElement gamma;
};

/// Searches gamma = u + v sqrt(m) with integer |u|, |v| <= H for H = 1, 2, ... up to max_height.
NormalizedQuadInput normalize_input(const Integer& m, const NFElement& alpha, const NFElement& beta,
                                    int max_height = 64);

/// x_1 = -d/c, where P(x_1) is rational.
Rational base_x(const QuadCurveInput& input);

/// Twist decomposition in gamma = u + v sqrt(m):
///   gamma^4 alpha = T2 + T1 sqrt(m),   gamma^6 beta = S2 + S1 sqrt(m),
/// and Q = -T1 (S1^3 + S1 T1^2 T2 - S2 T1^3) of degree 22.
struct TwistData {
    BiHomPoly T1, T2, S1, S2;
    BiHomPoly Q;
};

/// T1, T2, S1, S2 with the weight-2 and weight-3 functional equations checked; Q left empty.
TwistData twist_polys(const QuadCurveInput& input);
/// Q with degree, weight-11 functional equation and non-vanishing checked.
BiHomPoly build_Q(const QuadCurveInput& input);
TwistData twist_data(const QuadCurveInput& input);

/// -S1(u, v) / T1(u, v). Throws std::domain_error "degenerate specialization" if T1(u, v) = 0.
Rational x_gamma(const TwistData& data, const Rational& u, const Rational& v);

/// The u^22 and u^21 v coefficients of Q from their closed forms in (a, b, c, d, m).
struct VanishingCoeffs {
    Rational a0, a1;
};
VanishingCoeffs vanishing_coeffs_closed_form(const QuadCurveInput& input);
/// Closed forms cross-checked against Q; throws InternalError on mismatch.
VanishingCoeffs vanishing_coeffs(const QuadCurveInput& input);
VanishingCoeffs vanishing_coeffs(const QuadCurveInput& input, const BiHomPoly& q);

/// Everything needed to forge points on the user's curve.
class QuadConstruction {
   public:
    /// Validates, normalizes and expands. The curve is y^2 = x^3 + alpha x + beta
    /// as given; forged points are mapped back through the normalizing gamma.
    QuadConstruction(const Integer& m, const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    const FieldPtr& field() const noexcept { return field_; }
    const EllipticCurve& curve() const noexcept { return curve_; }
    const QuadCurveInput& original() const noexcept { return original_; }
    const QuadCurveInput& input() const noexcept { return normalized_.input; }
    const NFElement& gamma0() const noexcept { return normalized_.gamma; }
    const TwistData& data() const noexcept { return data_; }

    /// Point (gamma^-2 x_gamma, gamma^-3 sqrt(P_gamma(x_gamma))) for gamma = u + v sqrt(m).
    ForgeOutcome forge(const Rational& u, const Rational& v) const;

    /// Primitive integer pairs (u, v) with max(|u|, |v|) <= height, one per
    /// projective class, ordered by height then v then u.
    static std::vector<Params> candidates(int height);

   private:
    QuadCurveInput original_;
    FieldPtr field_;
    EllipticCurve curve_;
    NormalizedQuadInput normalized_;
    TwistData data_;
};

ForgeOutcome forge_quad_point(const QuadConstruction& construction, const Rational& u, const Rational& v);

}  // namespace abrank

#endif  // ABRANK_QUAD_CONSTRUCT_HPP
