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

#ifndef ABRANK_CUBIC_CONSTRUCT_HPP
#define ABRANK_CUBIC_CONSTRUCT_HPP

#include "abrank/forged_point.hpp"
#include "abrank/kpoly.hpp"

namespace abrank {

/// lambda with minimal polynomial L(t) = t^3 - a t^2 + b t - c, and the
/// Legendre curve y^2 = x(x - 1)(x - lambda) over K = Q(lambda).
struct CubicInput {
    Rational a, b, c;
    FieldPtr field;

    /// Throws std::invalid_argument if L has a rational root.
    static CubicInput make(const Rational& a, const Rational& b, const Rational& c);
    UniPoly L() const;
    NFElement lambda() const { return NFElement::generator(field); }
};

/// M(t) = (t^4 - 2b t^2 + 8c t + b^2 - 4ac) / 4
UniPoly build_M(const CubicInput& input);
/// N(t) = L(t) M(t) (M(t) - L(t)), degree 11.
UniPoly build_N(const CubicInput& input);
/// ((b - t^2)/2 + (t - a) lambda + lambda^2), the square root of M - L lambda.
KPoly cubic_bracket(const CubicInput& input);

/// Expands the bracket squared in K[t] and compares it with M(t) - L(t) lambda.
bool verify_cubic_identity(const CubicInput& input);

class CubicConstruction {
   public:
    explicit CubicConstruction(CubicInput input);

    const CubicInput& input() const noexcept { return input_; }
    const FieldPtr& field() const noexcept { return input_.field; }
    const EllipticCurve& curve() const noexcept { return curve_; }
    const UniPoly& M() const noexcept { return m_; }
    const UniPoly& N() const noexcept { return n_; }

    /// (M/L, bracket * sqrt(N) / L^2) at t = t0.
    ForgeOutcome forge(const Rational& t0) const;
    static std::vector<Params> candidates(int height);

   private:
    CubicInput input_;
    EllipticCurve curve_;
    UniPoly l_, m_, n_;
    KPoly bracket_;
};

inline ForgeOutcome forge_cubic_point(const CubicConstruction& construction, const Rational& t0) {
    return construction.forge(t0);
}

}  // namespace abrank

#endif  // ABRANK_CUBIC_CONSTRUCT_HPP
