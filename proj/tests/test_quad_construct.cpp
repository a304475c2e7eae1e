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

#include "abrank/quad_construct.hpp"
#include "abrank/squarefree.hpp"
#include "abrank/verify_suites.hpp"
#include "support.hpp"

using namespace abrank;
using abrank::test::Q;
using abrank::test::R;

namespace {

// a + b sqrt(m) with integer-free rational pair arithmetic.
struct Pair {
    Rational a, b;
};
Pair mul(const Pair& x, const Pair& y, const Rational& m) { return {x.a * y.a + m * x.b * y.b, x.a * y.b + x.b * y.a}; }
Pair power(Pair x, int e, const Rational& m) {
    Pair r{1, 0};
    for (int i = 0; i < e; ++i) r = mul(r, x, m);
    return r;
}

QuadCurveInput worked() { return {Integer(2), Q(1), Q(1), Q(1), Q(1)}; }

// Closed forms for the two top coefficients of Q.
Rational a0_oracle(const QuadCurveInput& in) {
    const Rational &a = in.a, &b = in.b, &c = in.c, &d = in.d;
    return c * (-d * d * d - a * d * c * c + b * c * c * c);
}
Rational a1_oracle(const QuadCurveInput& in) {
    const Rational &a = in.a, &b = in.b, &c = in.c, &d = in.d, m(in.m);
    return 2 * (-6 * a * a * d * c * c - 2 * a * d * d * d + 5 * a * b * c * c * c + m * c * c * c * c * d -
                9 * c * d * d * b);
}

}  // namespace

TEST_CASE("input validation") {
    CHECK_NOTHROW(validate_quad_curve(worked()));
    CHECK_THROWS_AS(validate_quad_curve({Integer(4), Q(1), Q(1), Q(1), Q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(validate_quad_curve({Integer(1), Q(1), Q(1), Q(1), Q(1)}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_quad_curve({Integer(2), Q(0), Q(1), Q(0), Q(1)}),
                         doctest::Contains("theorem hypothesis violated"), std::domain_error);
    CHECK_THROWS_WITH_AS(validate_quad_curve({Integer(2), Q(1), Q(0), Q(1), Q(0)}),
                         doctest::Contains("theorem hypothesis violated"), std::domain_error);
}

TEST_CASE("normalize_input") {
    const FieldPtr k = NumberField::quadratic(Integer(2));
    const NFElement s(k, {Q(1), Q(1)});
    const auto same = normalize_input(Integer(2), s, s);
    CHECK(same.gamma == NFElement::from_rational(k, 1));
    CHECK(same.input.a == 1);
    CHECK(same.input.d == 1);

    const NFElement one = NFElement::from_rational(k, 1);
    const auto scaled = normalize_input(Integer(2), one, s);
    const NFElement g = scaled.gamma;
    CHECK(height(g.coord(0)) <= 2);
    CHECK(height(g.coord(1)) <= 2);
    CHECK(scaled.input.c != 0);
    CHECK(scaled.input.d != 0);
    CHECK(g.pow(4) * one == scaled.input.alpha(k));
    CHECK(g.pow(6) * s == scaled.input.beta(k));

    CHECK_THROWS_WITH_AS(normalize_input(Integer(2), NFElement::from_rational(k, 0), s),
                         doctest::Contains("theorem hypothesis violated"), std::domain_error);
}

TEST_CASE("base_x") {
    CHECK(base_x({Integer(2), Q(1), Q(3), Q(2), Q(4)}) == -2);
    CHECK(base_x(worked()) == -1);
    CHECK(base_x({Integer(2), Q(1), Q(1), Q(3), Q(-6)}) == 2);
    CHECK_THROWS_AS(base_x({Integer(2), Q(1), Q(1), Q(0), Q(1)}), std::domain_error);
}

TEST_CASE("twist polynomials of the worked instance") {
    const TwistData data = twist_polys(worked());
    const BiHomPoly u = BiHomPoly::u(), v = BiHomPoly::v();
    CHECK(data.T1 == u.pow(4) + Q(4) * u.pow(3) * v + Q(12) * u.pow(2) * v.pow(2) + Q(8) * u * v.pow(3) +
                         Q(4) * v.pow(4));
    CHECK(data.T2 == u.pow(4) + Q(8) * u.pow(3) * v + Q(12) * u.pow(2) * v.pow(2) + Q(16) * u * v.pow(3) +
                         Q(4) * v.pow(4));
    CHECK(data.T1(Q(1), Q(1)) == 29);
    CHECK(data.T2(Q(1), Q(1)) == 41);
    CHECK(data.S1(Q(1), Q(1)) == 169);
    CHECK(data.S2(Q(1), Q(1)) == 239);
}

TEST_CASE("twist polynomials match direct expansion") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const QuadCurveInput in = random_quad_input(rng);
        const TwistData data = twist_polys(in);
        const Rational m(in.m);
        for (int j = 0; j < 5; ++j) {
            const Rational u = test::random_q(rng), v = test::random_q(rng);
            const Pair g{u, v};
            const Pair ta = mul(power(g, 4, m), {in.a, in.c}, m);
            const Pair sb = mul(power(g, 6, m), {in.b, in.d}, m);
            CHECK(data.T2(u, v) == ta.a);
            CHECK(data.T1(u, v) == ta.b);
            CHECK(data.S2(u, v) == sb.a);
            CHECK(data.S1(u, v) == sb.b);
        }
    }
}

TEST_CASE("x_gamma") {
    const TwistData data = twist_data(worked());
    CHECK(x_gamma(data, Q(1), Q(1)) == R("-169/29"));
    CHECK(x_gamma(data, Q(1), Q(0)) == -1);
    // alpha = (1 + sqrt2)^-4 makes T1(1, 1) = 0.
    const QuadCurveInput in{Integer(2), Q(17), Q(1), Q(-12), Q(1)};
    const TwistData deg = twist_data(in);
    CHECK(deg.T1(Q(1), Q(1)) == 0);
    CHECK_THROWS_WITH_AS(x_gamma(deg, Q(1), Q(1)), doctest::Contains("degenerate specialization"),
                         std::domain_error);
    const auto skip = QuadConstruction(Integer(2), Q(17), Q(1), Q(-12), Q(1)).forge(Q(1), Q(1));
    REQUIRE_FALSE(skip.forged());
    CHECK(skip.skip().reason.find("degenerate specialization") != std::string::npos);
}

TEST_CASE("Q for the worked instance") {
    const BiHomPoly q = build_Q(worked());
    CHECK(q.degree() == 22);
    CHECK(check_functional_eq(q, Integer(2), 11));
    const Rational x = R("-169/29");
    const Rational r = x * x * x + 41 * x + 239;
    CHECK(r == R("-4825127/24389"));
    CHECK(q(Q(1), Q(1)) == pow(Rational(29), 4) * r);
    CHECK(q(Q(1), Q(1)) == -139928683);
    CHECK(poly_not_square(q));
}

TEST_CASE("vanishing coefficients") {
    const auto vc = vanishing_coeffs(worked());
    CHECK(vc.a0 == -1);
    CHECK(vc.a1 == -20);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const QuadCurveInput in = random_quad_input(rng);
        const BiHomPoly q = build_Q(in);
        CHECK(q.degree() == 22);
        CHECK(check_functional_eq(q, in.m, 11));
        CHECK(q.coeff(22) == a0_oracle(in));
        CHECK(q.coeff(21) == a1_oracle(in));
        CHECK_FALSE((a0_oracle(in) == 0 && a1_oracle(in) == 0));
    }
}

TEST_CASE("forge_quad_point for the worked instance") {
    const QuadConstruction qc(Integer(2), Q(1), Q(1), Q(1), Q(1));
    const auto out = forge_quad_point(qc, Q(1), Q(1));
    REQUIRE(out.forged());
    const ForgedPoint& fp = out.point();
    CHECK(fp.delta == rational_squarefree_part(R("-4825127/24389")));
    CHECK(fp.delta == -139928683);
    CHECK(on_curve(qc.curve(), fp.point));
    CHECK(fp.construction == ConstructionKind::Quadratic);

    const FieldPtr k = qc.field();
    const NFElement g(k, {Q(1), Q(1)});
    CHECK(fp.point.x().base() == g.pow(-2) * NFElement::from_rational(k, R("-169/29")));
    CHECK(fp.point.x().in_base_field());

    // gamma = 1 gives (x_1, sqrt(P(x_1))) with x_1 = -d/c.
    const auto first = forge_quad_point(qc, Q(1), Q(0));
    REQUIRE(first.forged());
    CHECK(first.point().point.x().base() == NFElement::from_rational(k, -1));
    CHECK(first.point().delta == -1);
    CHECK(on_curve(qc.curve(), first.point().point));
    CHECK(torsion_probe(qc.curve(), fp.point) == TorsionVerdict::none_up_to(24));
}

TEST_CASE("forged points lie on the original curve") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10; ++i) {
        const QuadCurveInput in = random_quad_input(rng);
        const QuadConstruction qc(in.m, in.a, in.b, in.c, in.d);
        int forged = 0;
        for (const auto& p : QuadConstruction::candidates(2)) {
            const auto out = qc.forge(p[0].second, p[1].second);
            if (!out.forged()) continue;
            ++forged;
            CHECK(on_curve(qc.curve(), out.point().point));
            CHECK(is_squarefree(out.point().delta));
        }
        CHECK(forged > 0);
    }
}

TEST_CASE("candidate order") {
    const auto c = QuadConstruction::candidates(2);
    REQUIRE(c.size() >= 4);
    CHECK(c[0] == Params{{"u", Q(1)}, {"v", Q(0)}});
    CHECK(c[1] == Params{{"u", Q(-1)}, {"v", Q(1)}});
    CHECK(c[2] == Params{{"u", Q(0)}, {"v", Q(1)}});
    CHECK(c[3] == Params{{"u", Q(1)}, {"v", Q(1)}});
    // One representative per projective class.
    for (const auto& p : c) CHECK_FALSE((p[0].second == 2 && p[1].second == 2));
}
