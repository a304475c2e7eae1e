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

#include "abrank/cubic_construct.hpp"

#include <stdexcept>

namespace abrank {

CubicInput CubicInput::make(const Rational& a, const Rational& b, const Rational& c) {
    const UniPoly l{-c, b, -a, Rational(1)};
    return {a, b, c, NumberField::create(l)};
}

UniPoly CubicInput::L() const { return UniPoly{-c, b, -a, Rational(1)}; }

UniPoly build_M(const CubicInput& in) {
    const Rational q(1, 4);
    return UniPoly{q * (in.b * in.b - 4 * in.a * in.c), q * 8 * in.c, q * (-2 * in.b), 0, q};
}

UniPoly build_N(const CubicInput& in) {
    const UniPoly l = in.L();
    const UniPoly m = build_M(in);
    UniPoly n = l * m * (m - l);
    if (n.degree() != 11) throw InternalError("deg N must be 11");
    return n;
}

KPoly cubic_bracket(const CubicInput& in) {
    const FieldPtr& k = in.field;
    const UniPoly half_b_minus_t2{in.b / 2, 0, Rational(-1, 2)};
    const UniPoly t_minus_a{-in.a, Rational(1)};
    return KPoly::lambda_power(k, 0, half_b_minus_t2) + KPoly::lambda_power(k, 1, t_minus_a) +
           KPoly::lambda_power(k, 2);
}

bool verify_cubic_identity(const CubicInput& in) {
    const KPoly bracket = cubic_bracket(in);
    const KPoly rhs = KPoly::lambda_power(in.field, 0, build_M(in)) - KPoly::lambda_power(in.field, 1, in.L());
    return bracket * bracket == rhs;
}

CubicConstruction::CubicConstruction(CubicInput input)
    : input_(std::move(input)),
      curve_(EllipticCurve::legendre(input_.lambda())),
      l_(input_.L()),
      m_(build_M(input_)),
      n_(build_N(input_)),
      bracket_(cubic_bracket(input_)) {
    if (!verify_cubic_identity(input_)) throw InternalError("cubic bracket identity failed");
}

ForgeOutcome CubicConstruction::forge(const Rational& t0) const {
    ForgeOutcome out{{{"t0", t0}}, Skip{}};
    const Rational l0 = l_(t0);
    if (l0 == 0) throw InternalError("L has a rational root");
    const Rational m0 = m_(t0);
    const Rational n0 = n_(t0);
    if (n0 == 0) {
        out.result = Skip{"N(t0) = 0"};
        return out;
    }
    const auto dec = rational_squarefree_decompose(n0);
    const FieldPtr& k = input_.field;
    const NFElement lambda = input_.lambda();
    const NFElement c0 = bracket_(t0);
    const NFElement x = NFElement::from_rational(k, m0 / l0);

    // x(x - 1)(x - lambda) = M (M - L)(M - L lambda) / L^3
    const NFElement lhs = x * (x - Rational(1)) * (x - lambda);
    const NFElement rhs = (m0 * (m0 - l0) / (l0 * l0 * l0)) * (NFElement::from_rational(k, m0) - l0 * lambda);
    if (lhs != rhs) throw InternalError("specialized cubic on-curve identity failed");

    const NFElement yrad = (dec.root / (l0 * l0)) * c0;
    ForgedPoint fp{CurvePoint(QuadExtElement(x, dec.delta),
                              QuadExtElement(NFElement::from_rational(k, 0), yrad, dec.delta)),
                   dec.delta,
                   ConstructionKind::Cubic,
                   out.params,
                   dec.status,
                   delta_is_square_in(*k, dec.delta).value_or(false),
                   std::nullopt};
    if (!on_curve(curve_, fp.point)) throw InternalError("forged cubic point is off the curve");
    out.result = std::move(fp);
    return out;
}

std::vector<Params> CubicConstruction::candidates(int height) {
    std::vector<Params> out;
    for (const auto& t : rationals_up_to_height(height)) out.push_back({{"t0", t}});
    return out;
}

}  // namespace abrank
