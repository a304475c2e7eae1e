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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abrank/elliptic.hpp"
#include "abrank/squarefree.hpp"
#include "support.hpp"

using namespace abrank;
using abrank::test::poly;
using abrank::test::Q;

namespace {

const FieldPtr kQ = NumberField::rationals();

NFElement q(const Rational& x) { return NFElement::from_rational(kQ, x); }
QuadExtElement qe(const Rational& x, const Integer& delta = 1) { return QuadExtElement(q(x), delta); }
CurvePoint rational_point(long x, long y) { return CurvePoint(qe(x), qe(y)); }

EllipticCurve legendre_q(long lambda) { return EllipticCurve::legendre(q(lambda)); }
EllipticCurve short_q(long a, long b) { return EllipticCurve::short_weierstrass(q(a), q(b)); }

// Point over Q(sqrt(delta)) with rational x.
CurvePoint lift_x(const EllipticCurve& e, const Rational& x) {
    const Rational w = e.rhs(qe(x)).base().coord(0);
    const auto dec = rational_squarefree_decompose(w);
    return CurvePoint(QuadExtElement(q(x), dec.delta), QuadExtElement(q(0), q(dec.root), dec.delta));
}

}  // namespace

TEST_CASE("curve construction") {
    CHECK_THROWS_AS(legendre_q(0), std::domain_error);
    CHECK_THROWS_AS(legendre_q(1), std::domain_error);
    CHECK_THROWS_AS(short_q(0, 0), std::domain_error);
    const auto sw = legendre_q(2).to_short_weierstrass();
    CHECK(sw.shift == q(-1));  // x = X - a2/3 with a2 = -(1 + lambda)
    CHECK(sw.alpha == q(-1));
    CHECK(sw.beta == q(0));
}

TEST_CASE("on_curve examples") {
    CHECK(on_curve(legendre_q(2), rational_point(0, 0)));
    CHECK_FALSE(on_curve(short_q(1, 0), rational_point(1, 1)));
    CHECK(on_curve(short_q(1, 0), CurvePoint::infinity()));
    const FieldPtr k = NumberField::quadratic(Integer(2));
    CHECK_THROWS_AS(on_curve(EllipticCurve::legendre(NFElement(k, {Q(0), Q(1)})), rational_point(0, 0)),
                    std::invalid_argument);
}

TEST_CASE("point_add examples") {
    const EllipticCurve e = legendre_q(2);
    const CurvePoint p = rational_point(0, 0);
    CHECK(point_add(e, p, CurvePoint::infinity()) == p);
    CHECK(point_add(e, p, p).is_infinity());
    CHECK(point_add(e, p, rational_point(1, 0)) == rational_point(2, 0));
    CHECK_THROWS_AS(point_add(e, p, rational_point(1, 1)), std::invalid_argument);
}

TEST_CASE("scalar_mul examples") {
    const EllipticCurve e = legendre_q(5);
    const CurvePoint p = rational_point(0, 0);
    CHECK(scalar_mul(e, 0, p).is_infinity());
    CHECK(scalar_mul(e, 2, p).is_infinity());
    CHECK(scalar_mul(e, 1, p) == p);
    const EllipticCurve f = short_q(0, -2);
    const CurvePoint g = rational_point(3, 5);
    CHECK(scalar_mul(f, 5, g) == point_add(f, scalar_mul(f, 2, g), scalar_mul(f, 3, g)));
    CHECK(scalar_mul(f, -3, g) == -scalar_mul(f, 3, g));
}

TEST_CASE("group law axioms") {
    const EllipticCurve e = short_q(-2, 5);
    const CurvePoint p = rational_point(1, 2);
    const CurvePoint t = lift_x(e, Q(3));
    REQUIRE(on_curve(e, t));
    const CurvePoint p2 = point_add(e, p, p), p3 = point_add(e, p2, p);
    CHECK(point_add(e, point_add(e, p, p2), p3) == point_add(e, p, point_add(e, p2, p3)));
    CHECK(point_add(e, p, t) == point_add(e, t, p));
    CHECK(point_add(e, point_add(e, p, t), -t) == p);
    CHECK(point_add(e, t, -t).is_infinity());
    CHECK(on_curve(e, point_add(e, t, p3)));
    CHECK(point_add(e, point_add(e, t, t), p) == point_add(e, t, point_add(e, t, p)));
}

TEST_CASE("j_invariant") {
    CHECK(j_invariant(short_q(1, 0)) == q(1728));
    CHECK(j_invariant(short_q(0, 1)) == q(0));
    CHECK(j_invariant(legendre_q(-1)) == q(1728));
    for (long l = -6; l <= 9; ++l) {
        if (l == 0 || l == 1) continue;
        const Rational lam(l), s = lam * lam - lam + 1;
        const Rational oracle = 256 * s * s * s / (lam * lam * (lam - 1) * (lam - 1));
        CHECK(j_invariant(legendre_q(l)) == q(oracle));
    }
    const FieldPtr k = NumberField::quadratic(Integer(2));
    const NFElement g(k, {Q(1), Q(1)}), a(k, {Q(1), Q(1)}), b(k, {Q(1), Q(1)});
    CHECK(j_invariant(EllipticCurve::short_weierstrass(g.pow(4) * a, g.pow(6) * b)) ==
          j_invariant(EllipticCurve::short_weierstrass(a, b)));
}

TEST_CASE("torsion verdict text") {
    CHECK(TorsionVerdict::order_of(6, 24).to_string() == "TorsionOrder(6)");
    CHECK(TorsionVerdict::none_up_to(24).to_string() == "NoTorsionUpTo(24)");
    CHECK(TorsionVerdict::parse("TorsionOrder(2)") == TorsionVerdict::order_of(2, 0));
    CHECK(TorsionVerdict::parse("NoTorsionUpTo(12)") == TorsionVerdict::none_up_to(12));
    CHECK_THROWS_AS(TorsionVerdict::parse("Torsion(2)"), std::invalid_argument);
}

TEST_CASE("torsion_probe examples") {
    CHECK(torsion_probe(legendre_q(2), CurvePoint::infinity()) == TorsionVerdict::order_of(1, 24));
    CHECK(torsion_probe(legendre_q(2), rational_point(0, 0)) == TorsionVerdict::order_of(2, 24));
    // y^2 = x^3 + 1 has torsion Z/6: (2,3) of order 6, (0,1) of order 3, (-1,0) of order 2.
    const EllipticCurve e = short_q(0, 1);
    CHECK(torsion_probe(e, rational_point(2, 3)) == TorsionVerdict::order_of(6, 24));
    CHECK(torsion_probe(e, rational_point(0, 1)) == TorsionVerdict::order_of(3, 24));
    CHECK(torsion_probe(e, rational_point(-1, 0)) == TorsionVerdict::order_of(2, 24));
    CHECK(torsion_probe(e, rational_point(2, 3), 5) == TorsionVerdict::none_up_to(5));
    // (3,5) on y^2 = x^3 - 2 has infinite order.
    CHECK(torsion_probe(short_q(0, -2), rational_point(3, 5)) == TorsionVerdict::none_up_to(24));
    CHECK_THROWS_AS(torsion_probe(e, rational_point(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(torsion_probe(e, rational_point(2, 3), 0), std::invalid_argument);
}

TEST_CASE("torsion_probe agrees with repeated addition") {
    // A mix of torsion and non-torsion points, some over quadratic extensions.
    const std::pair<EllipticCurve, CurvePoint> cases[] = {
        {short_q(0, 1), rational_point(2, 3)},
        {short_q(0, -2), rational_point(3, 5)},
        {short_q(-2, 5), rational_point(1, 2)},
        {legendre_q(2), rational_point(1, 0)},
        {short_q(-2, 5), lift_x(short_q(-2, 5), Q(3))},
        {legendre_q(-3), lift_x(legendre_q(-3), Q(2))},
        // y^2 = x^3 - 43x + 166 has a rational point of order 7.
        {short_q(-43, 166), rational_point(3, 8)},
    };
    for (const auto& [e, p] : cases) {
        const auto fast = torsion_probe(e, p, 12);
        CHECK(fast == torsion_probe_exact(e, p, 12));
        CHECK(fast.to_string() == torsion_probe_exact(e, p, 12).to_string());
    }
    CHECK(torsion_probe(short_q(-43, 166), rational_point(3, 8)) == TorsionVerdict::order_of(7, 24));
}
