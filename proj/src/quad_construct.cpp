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

#include "abrank/quad_construct.hpp"

#include <numeric>
#include <stdexcept>

namespace abrank {

namespace {

/// re + im sqrt(m) with homogeneous polynomial parts.
struct RadicalPair {
    BiHomPoly re, im;
};

RadicalPair mul(const RadicalPair& x, const RadicalPair& y, const Rational& m) {
    return {x.re * y.re + m * (x.im * y.im), x.re * y.im + x.im * y.re};
}

RadicalPair scale(const RadicalPair& x, const Rational& re, const Rational& im, const Rational& m) {
    return {re * x.re + (m * im) * x.im, im * x.re + re * x.im};
}

}  // namespace

void validate_quad_curve(const QuadCurveInput& input) {
    if (input.m == 0 || input.m == 1 || !is_squarefree(input.m))
        throw std::invalid_argument("m = " + input.m.get_str() + " must be a squarefree integer other than 1");
    const FieldPtr k = input.field();
    const EllipticCurve curve = EllipticCurve::short_weierstrass(input.alpha(k), input.beta(k));
    const NFElement j = j_invariant(curve);
    if (j == NFElement::from_rational(k, 0) || j == NFElement::from_rational(k, 1728))
        throw std::domain_error("theorem hypothesis violated: j-invariant is " + j.to_string() +
                                " (must not be 0 or 1728)");
}

NormalizedQuadInput normalize_input(const Integer& m, const NFElement& alpha, const NFElement& beta, int max_height) {
    const auto [a, c] = split_quadratic(alpha);
    const auto [b, d] = split_quadratic(beta);
    const QuadCurveInput raw{m, a, b, c, d};
    validate_quad_curve(raw);
    const FieldPtr k = alpha.field();
    if (c != 0 && d != 0) return {raw, NFElement::from_rational(k, 1)};

    for (long h = 1; h <= max_height; ++h) {
        for (long u = -h; u <= h; ++u) {
            for (long v = -h; v <= h; ++v) {
                if (std::max(std::abs(u), std::abs(v)) != h) continue;
                const NFElement gamma(k, {Rational(u), Rational(v)});
                const auto [a2, c2] = split_quadratic(gamma.pow(4) * alpha);
                const auto [b2, d2] = split_quadratic(gamma.pow(6) * beta);
                if (c2 != 0 && d2 != 0) return {{m, a2, b2, c2, d2}, gamma};
            }
        }
    }
    throw std::domain_error("no rescaling gamma with both irrational parts up to height " + std::to_string(max_height));
}

Rational base_x(const QuadCurveInput& input) {
    if (input.c == 0) throw std::domain_error("base_x needs c != 0");
    const Rational x1 = -input.d / input.c;
    // sqrt(m) part of x^3 + alpha x + beta at x1 is c x1 + d.
    if (input.c * x1 + input.d != 0) throw InternalError("P(x_1) is not rational");
    return x1;
}

TwistData twist_polys(const QuadCurveInput& input) {
    const Rational m(input.m);
    const RadicalPair gamma{BiHomPoly::u(), BiHomPoly::v()};
    const RadicalPair g2 = mul(gamma, gamma, m);
    const RadicalPair g4 = mul(g2, g2, m);
    const RadicalPair g6 = mul(g4, g2, m);
    const RadicalPair g4a = scale(g4, input.a, input.c, m);
    const RadicalPair g6b = scale(g6, input.b, input.d, m);

    TwistData data{g4a.im, g4a.re, g6b.im, g6b.re, BiHomPoly(22)};
    if (data.T1.degree() != 4 || data.S1.degree() != 6) throw InternalError("twist polynomial degree");
    for (const auto* t : {&data.T1, &data.T2})
        if (!check_functional_eq(*t, input.m, 2)) throw InternalError("T_i(mu, v) != m^2 T_i(v, u)");
    for (const auto* s : {&data.S1, &data.S2})
        if (!check_functional_eq(*s, input.m, 3)) throw InternalError("S_i(mu, v) != m^3 S_i(v, u)");
    return data;
}

namespace {

BiHomPoly q_from(const TwistData& t) {
    const BiHomPoly t1sq = t.T1 * t.T1;
    return -(t.T1 * (t.S1.pow(3) + t.S1 * t1sq * t.T2 - t.S2 * t1sq * t.T1));
}

}  // namespace

BiHomPoly build_Q(const QuadCurveInput& input) { return twist_data(input).Q; }

TwistData twist_data(const QuadCurveInput& input) {
    TwistData data = twist_polys(input);
    data.Q = q_from(data);
    if (data.Q.degree() != 22) throw InternalError("Q must have degree 22");
    if (!check_functional_eq(data.Q, input.m, 11)) throw InternalError("Q(mu, v) != m^11 Q(v, u)");
    if (data.Q.is_zero()) throw InternalError("construction degenerate: Q vanishes identically");
    return data;
}

Rational x_gamma(const TwistData& data, const Rational& u, const Rational& v) {
    const Rational t1 = data.T1(u, v);
    if (t1 == 0) throw std::domain_error("degenerate specialization: T1(u, v) = 0");
    return -data.S1(u, v) / t1;
}

VanishingCoeffs vanishing_coeffs_closed_form(const QuadCurveInput& in) {
    const Rational &a = in.a, &b = in.b, &c = in.c, &d = in.d;
    const Rational m(in.m);
    const Rational a0 = c * (-d * d * d - a * d * c * c + b * c * c * c);
    const Rational a1 = 2 * (-6 * a * a * d * c * c - 2 * a * d * d * d + 5 * a * b * c * c * c + m * c * c * c * c * d -
                             9 * c * d * d * b);
    return {a0, a1};
}

VanishingCoeffs vanishing_coeffs(const QuadCurveInput& input, const BiHomPoly& q) {
    const VanishingCoeffs closed = vanishing_coeffs_closed_form(input);
    if (closed.a0 != q.coeff(22) || closed.a1 != q.coeff(21))
        throw InternalError("A0/A1 closed forms disagree with the expansion of Q");
    return closed;
}

VanishingCoeffs vanishing_coeffs(const QuadCurveInput& input) { return vanishing_coeffs(input, build_Q(input)); }

QuadConstruction::QuadConstruction(const Integer& m, const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& d)
    : original_{m, a, b, c, d},
      field_((validate_quad_curve(original_), original_.field())),
      curve_(EllipticCurve::short_weierstrass(original_.alpha(field_), original_.beta(field_))),
      normalized_(normalize_input(m, original_.alpha(field_), original_.beta(field_))),
      data_(twist_data(normalized_.input)) {}

ForgeOutcome QuadConstruction::forge(const Rational& u, const Rational& v) const {
    ForgeOutcome out{{{"u", u}, {"v", v}}, Skip{}};
    const NFElement gamma(field_, {u, v});
    if (gamma.is_zero()) {
        out.result = Skip{"gamma = 0"};
        return out;
    }
    const Rational t1 = data_.T1(u, v);
    if (t1 == 0) {
        out.result = Skip{"degenerate specialization: T1(u,v) = 0"};
        return out;
    }
    const Rational xg = -data_.S1(u, v) / t1;
    const Rational t2 = data_.T2(u, v), s2 = data_.S2(u, v);
    if (t1 * xg + data_.S1(u, v) != 0) throw InternalError("sqrt(m) part of P_gamma(x_gamma) does not vanish");
    const Rational w = xg * xg * xg + t2 * xg + s2;
    if (data_.Q(u, v) != pow(t1, 4) * w) throw InternalError("Q(u, v) != T1(u, v)^4 P_gamma(x_gamma)");
    if (w == 0) {
        out.result = Skip{"P_gamma(x_gamma) = 0"};
        return out;
    }

    const auto dec = rational_squarefree_decompose(w);
    // gamma scales the normalized curve, gamma0 takes it back to the user's curve.
    const NFElement ginv = (gamma * normalized_.gamma).inverse();
    const NFElement ginv2 = ginv * ginv;
    const NFElement x = xg * ginv2;
    const NFElement yrad = dec.root * (ginv2 * ginv);
    const NFElement zero = NFElement::from_rational(field_, 0);

    ForgedPoint fp{CurvePoint(QuadExtElement(x, dec.delta), QuadExtElement(zero, yrad, dec.delta)),
                   dec.delta,
                   ConstructionKind::Quadratic,
                   out.params,
                   dec.status,
                   delta_is_square_in(*field_, dec.delta).value_or(false),
                   std::nullopt};
    if (!on_curve(curve_, fp.point)) throw InternalError("forged quadratic point is off the curve");
    out.result = std::move(fp);
    return out;
}

std::vector<Params> QuadConstruction::candidates(int height) {
    std::vector<Params> out;
    for (long h = 1; h <= height; ++h) {
        for (long v = 0; v <= h; ++v) {
            for (long u = -h; u <= h; ++u) {
                if (std::max(std::abs(u), v) != h || std::gcd(std::abs(u), v) != 1) continue;
                if (v == 0 && u < 0) continue;
                out.push_back({{"u", Rational(u)}, {"v", Rational(v)}});
            }
        }
    }
    return out;
}

ForgeOutcome forge_quad_point(const QuadConstruction& construction, const Rational& u, const Rational& v) {
    return construction.forge(u, v);
}

}  // namespace abrank
