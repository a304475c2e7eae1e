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

#include "abrank/quartic_construct.hpp"

#include <stdexcept>

namespace abrank {

QuarticInput QuarticInput::make(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
    const UniPoly poly{s, r, q, p, Rational(1)};
    return {p, q, r, s, NumberField::create(poly)};
}

NFElement LambdaCubic::operator()(const FieldPtr& field, const Rational& u, const Rational& v) const {
    std::vector<Rational> c;
    for (const auto& vl : coeffs) c.push_back(vl(u, v));
    return NFElement(field, std::move(c));
}

QuarticABCD build_ABCD(const QuarticInput& in) {
    const Rational &p = in.p, &q = in.q, &r = in.r, &s = in.s;
    const Rational quarter(1, 4), half(1, 2);
    QuarticABCD out;
    out.A.e = UniPoly{-2 * s, -r, 0, p, 2};
    out.A.f = quarter * UniPoly{r * r - 4 * q * s, -8 * p * s, -(8 * s + 2 * p * r), 0, p * p + 4 * q, 8 * p, 8};
    out.B.e = UniPoly{r, 2 * q, 3 * p, 4};
    out.B.f = UniPoly{p * s, 4 * s + r * p, 4 * r + p * q, p * p + 4 * q, 5 * p, 4};
    // C = (-2uv - 2u^3 - pu^2 + r)/2 + (v + u^2 + pu + q) lambda + (u + p) lambda^2 + lambda^3
    out.C.coeffs[0] = {UniPoly{0, -1}, UniPoly{half * r, 0, -half * p, -1}};
    out.C.coeffs[1] = {UniPoly{1}, UniPoly{q, p, 1}};
    out.C.coeffs[2] = {UniPoly{}, UniPoly{p, 1}};
    out.C.coeffs[3] = {UniPoly{}, UniPoly{1}};

    const UniPoly P = in.P();
    auto mul = [&](const VLinear& x, const VLinear& y) {
        return VLinear{x.e * y.f + x.f * y.e, x.e * y.e * P + x.f * y.f};
    };
    const VLinear amb{out.A.e - out.B.e, out.A.f - out.B.f};
    out.D = mul(mul(out.A, out.B), amb);
    return out;
}

namespace {

/// X0 + X1 v in K[u] with v^2 = P(u).
struct Residue {
    KPoly x0, x1;
};

Residue mul(const Residue& a, const Residue& b, const UniPoly& P) {
    return {a.x0 * b.x0 + P * (a.x1 * b.x1), a.x0 * b.x1 + a.x1 * b.x0};
}

Residue from_cubic(const FieldPtr& k, const LambdaCubic& c) {
    Residue out{KPoly(k), KPoly(k)};
    for (unsigned i = 0; i < 4; ++i) {
        out.x0 = out.x0 + KPoly::lambda_power(k, i, c.coeffs[i].f);
        out.x1 = out.x1 + KPoly::lambda_power(k, i, c.coeffs[i].e);
    }
    return out;
}

}  // namespace

bool verify_quartic_identity(const QuarticInput& in) {
    const QuarticABCD abcd = build_ABCD(in);
    const FieldPtr& k = in.field;
    const Residue c = from_cubic(k, abcd.C);
    const Residue c2 = mul(c, c, in.P());
    // A - B lambda
    const Residue rhs{KPoly::lambda_power(k, 0, abcd.A.f) - KPoly::lambda_power(k, 1, abcd.B.f),
                      KPoly::lambda_power(k, 0, abcd.A.e) - KPoly::lambda_power(k, 1, abcd.B.e)};
    return c2.x0 == rhs.x0 && c2.x1 == rhs.x1;
}

BranchExpansion expand_at_infinity(const QuarticInput& in, Branch branch, int precision) {
    const QuarticABCD abcd = build_ABCD(in);
    const LaurentSeries v = laurent_sqrt(LaurentSeries::from_poly_at_infinity(in.P(), precision), branch);
    auto eval = [&](const VLinear& f) {
        return LaurentSeries::from_poly_at_infinity(f.e, precision) * v +
               LaurentSeries::from_poly_at_infinity(f.f, precision);
    };
    const LaurentSeries a = eval(abcd.A);
    const LaurentSeries b = eval(abcd.B);
    return {a, b, a - b};
}

PoleProfile pole_profile(const QuarticInput& in, int precision) {
    struct Attempt {
        Branch branch;
        std::optional<std::array<int, 3>> orders;
    };
    std::vector<Attempt> attempts;
    for (Branch br : {Branch::Plus, Branch::Minus}) {
        Attempt at{br, std::nullopt};
        try {
            const auto ex = expand_at_infinity(in, br, precision);
            at.orders = std::array<int, 3>{-laurent_valuation(ex.a), -laurent_valuation(ex.b),
                                           -laurent_valuation(ex.a_minus_b)};
        } catch (const std::domain_error&) {
        }
        attempts.push_back(at);
    }
    const Attempt* chosen = nullptr;
    for (const auto& at : attempts) {
        if (!at.orders) continue;
        if (!chosen || (*at.orders)[0] > (*chosen->orders)[0]) chosen = &at;
    }
    if (!chosen) throw std::domain_error("pole profile undetermined: raise precision");

    const auto& o = *chosen->orders;
    PoleProfile out{o[0], o[1], o[2], o[0] + o[1] + o[2], chosen->branch, std::nullopt};
    for (const auto& at : attempts)
        if (&at != chosen) out.other_branch = at.orders;
    if (out.d % 2 == 0) throw InternalError("D has even pole order; sqrt(D) would not ramify");
    return out;
}

std::vector<QuarticSeedPoint> search_quartic_points(const QuarticInput& in, int height) {
    if (height < 1) throw std::invalid_argument("search height must be >= 1");
    const UniPoly P = in.P();
    std::vector<QuarticSeedPoint> out;
    for (const auto& u : rationals_up_to_height(height)) {
        const auto v = rational_sqrt(P(u));
        if (!v) continue;
        out.push_back({u, *v});
        if (*v != 0) out.push_back({u, -*v});
    }
    return out;
}

QuarticConstruction::QuarticConstruction(QuarticInput input)
    : input_(std::move(input)), curve_(EllipticCurve::legendre(input_.lambda())), abcd_(build_ABCD(input_)) {
    if (!verify_quartic_identity(input_)) throw InternalError("quartic identity C^2 = A - B lambda failed");
}

ForgeOutcome QuarticConstruction::forge(const QuarticSeedPoint& seed) const {
    ForgeOutcome out{{{"u", seed.u}, {"v", seed.v}}, Skip{}};
    if (seed.v * seed.v != input_.P()(seed.u))
        throw std::invalid_argument("seed (" + seed.u.get_str() + ", " + seed.v.get_str() + ") is not on v^2 = P(u)");
    if (seed.v == 0) {
        out.result = Skip{"seed has v = 0"};
        return out;
    }
    const Rational a0 = abcd_.A(seed.u, seed.v);
    const Rational b0 = abcd_.B(seed.u, seed.v);
    if (b0 == 0) {
        out.result = Skip{"B(u,v) = 0"};
        return out;
    }
    const Rational d0 = a0 * b0 * (a0 - b0);
    if (abcd_.D(seed.u, seed.v) != d0) throw InternalError("reduced D disagrees with A B (A - B)");
    if (d0 == 0) {
        out.result = Skip{"D(u,v) = 0"};
        return out;
    }
    const FieldPtr& k = input_.field;
    const NFElement lambda = input_.lambda();
    const NFElement c0 = abcd_.C(k, seed.u, seed.v);
    if (c0 * c0 != NFElement::from_rational(k, a0) - b0 * lambda)
        throw InternalError("specialized quartic identity C^2 = A - B lambda failed");

    // sqrt(A (A - B) / B^3) = sqrt(D) / B^2
    const auto dec = rational_squarefree_decompose(d0);
    const NFElement x = NFElement::from_rational(k, a0 / b0);
    const NFElement yrad = (dec.root / (b0 * b0)) * c0;
    ForgedPoint fp{CurvePoint(QuadExtElement(x, dec.delta),
                              QuadExtElement(NFElement::from_rational(k, 0), yrad, dec.delta)),
                   dec.delta,
                   ConstructionKind::Quartic,
                   out.params,
                   dec.status,
                   delta_is_square_in(*k, dec.delta).value_or(false),
                   std::nullopt};
    if (!on_curve(curve_, fp.point)) throw InternalError("forged quartic point is off the curve");
    out.result = std::move(fp);
    return out;
}

std::vector<Params> QuarticConstruction::candidates(int height) const {
    std::vector<Params> out;
    for (const auto& seed : search_quartic_points(input_, height)) out.push_back({{"u", seed.u}, {"v", seed.v}});
    return out;
}

}  // namespace abrank
