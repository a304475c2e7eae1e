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

#include "abrank/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <regex>
#include <stdexcept>

namespace abrank {

EllipticCurve::EllipticCurve(CurveModel model, NFElement a2, NFElement a4, NFElement a6)
    : model_(model), a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
    if (discriminant().is_zero()) throw std::domain_error("singular curve: " + to_string());
}

EllipticCurve EllipticCurve::short_weierstrass(const NFElement& alpha, const NFElement& beta) {
    return EllipticCurve(CurveModel::ShortWeierstrass, NFElement::from_rational(alpha.field(), 0), alpha, beta);
}

EllipticCurve EllipticCurve::legendre(const NFElement& lambda) {
    if (lambda.is_zero() || (lambda - Rational(1)).is_zero())
        throw std::domain_error("Legendre parameter must not be 0 or 1");
    // x(x - 1)(x - lambda) = x^3 - (1 + lambda) x^2 + lambda x
    return EllipticCurve(CurveModel::Legendre, -(lambda + Rational(1)), lambda,
                         NFElement::from_rational(lambda.field(), 0));
}

EllipticCurve::ShortForm EllipticCurve::to_short_weierstrass() const {
    const Rational third(1, 3);
    const NFElement shift = third * a2_;
    const NFElement alpha = a4_ - third * (a2_ * a2_);
    const NFElement beta = a6_ - third * (a2_ * a4_) + Rational(2, 27) * (a2_ * a2_ * a2_);
    return {alpha, beta, shift};
}

NFElement EllipticCurve::discriminant() const {
    const auto s = to_short_weierstrass();
    return Rational(-16) * (Rational(4) * s.alpha.pow(3) + Rational(27) * (s.beta * s.beta));
}

QuadExtElement EllipticCurve::rhs(const QuadExtElement& x) const {
    const Integer& d = x.delta();
    return x * x * x + QuadExtElement(a2_, d) * x * x + QuadExtElement(a4_, d) * x + QuadExtElement(a6_, d);
}

std::string EllipticCurve::to_string() const {
    return "y^2 = x^3 + " + a2_.to_string() + " x^2 + " + a4_.to_string() + " x + " + a6_.to_string();
}

CurvePoint::CurvePoint(QuadExtElement x, QuadExtElement y) {
    if (x.delta() != y.delta() || !same_field(*x.field(), *y.field()))
        throw std::invalid_argument("point coordinates live in different fields");
    affine_.emplace(std::move(x), std::move(y));
}

Integer CurvePoint::delta() const { return is_infinity() ? Integer(1) : x().delta(); }

CurvePoint CurvePoint::operator-() const { return is_infinity() ? *this : CurvePoint(x(), -y()); }

bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
    if (p.delta() != q.delta()) {
        // The same K-point may carry different extension tags.
        const bool pk = p.x().in_base_field() && p.y().in_base_field();
        const bool qk = q.x().in_base_field() && q.y().in_base_field();
        return pk && qk && p.x().base() == q.x().base() && p.y().base() == q.y().base();
    }
    return p.x() == q.x() && p.y() == q.y();
}

std::string CurvePoint::to_string() const {
    if (is_infinity()) return "O";
    return "(" + x().to_string() + ", " + y().to_string() + ")";
}

namespace {

void require_compatible(const EllipticCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) return;
    if (!same_field(*curve.field(), *p.x().field()))
        throw std::invalid_argument("point and curve are over different base fields");
}

QuadExtElement rebase(const QuadExtElement& z, const Integer& delta) {
    if (z.delta() == delta) return z;
    if (!z.in_base_field()) throw std::invalid_argument("points over different quadratic extensions");
    return QuadExtElement(z.base(), delta);
}

void require_on_curve(const EllipticCurve& curve, const CurvePoint& p) {
    if (!on_curve(curve, p)) throw std::invalid_argument("point not on curve: " + p.to_string());
}

}  // namespace

bool on_curve(const EllipticCurve& curve, const CurvePoint& p) {
    require_compatible(curve, p);
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve.rhs(p.x());
}

namespace {

// Addition without the on-curve precondition check; callers validate once.
CurvePoint add_unchecked(const EllipticCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    Integer delta = p.delta();
    if (delta == 1) delta = q.delta();
    const QuadExtElement x1 = rebase(p.x(), delta), y1 = rebase(p.y(), delta);
    const QuadExtElement x2 = rebase(q.x(), delta), y2 = rebase(q.y(), delta);
    const QuadExtElement a2(curve.a2(), delta), a4(curve.a4(), delta);

    QuadExtElement slope = x1;
    if (x1 == x2) {
        if (y1 == -y2) return CurvePoint::infinity();  // includes 2-torsion doubling
        const Rational three = 3, two = 2;
        slope = (three * (x1 * x1) + two * (a2 * x1) + a4) / (two * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    const QuadExtElement x3 = slope * slope - a2 - x1 - x2;
    const QuadExtElement y3 = slope * (x1 - x3) - y1;
    if (x3.in_base_field() && y3.in_base_field())
        return CurvePoint(QuadExtElement(x3.base(), 1), QuadExtElement(y3.base(), 1));
    return CurvePoint(x3, y3);
}

}  // namespace

CurvePoint point_add(const EllipticCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    return add_unchecked(curve, p, q);
}

CurvePoint scalar_mul(const EllipticCurve& curve, long n, const CurvePoint& p) {
    require_on_curve(curve, p);
    CurvePoint base = n < 0 ? -p : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::infinity();
    while (k > 0) {
        if (k & 1UL) acc = add_unchecked(curve, acc, base);
        k >>= 1UL;
        if (k > 0) base = add_unchecked(curve, base, base);
    }
    return acc;
}

NFElement j_invariant(const EllipticCurve& curve) {
    const auto s = curve.to_short_weierstrass();
    const NFElement four_a3 = Rational(4) * s.alpha.pow(3);
    const NFElement denom = four_a3 + Rational(27) * (s.beta * s.beta);
    if (denom.is_zero()) throw std::domain_error("singular curve has no j-invariant");
    return Rational(1728) * four_a3 / denom;
}

std::string TorsionVerdict::to_string() const {
    return torsion ? "TorsionOrder(" + std::to_string(order) + ")" : "NoTorsionUpTo(" + std::to_string(bound) + ")";
}

TorsionVerdict TorsionVerdict::parse(const std::string& text) {
    static const std::regex pattern(R"((TorsionOrder|NoTorsionUpTo)\(([0-9]{1,9})\))");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed torsion verdict '" + text + "'");
    const int n = std::stoi(m[2].str());
    if (m[1].str() == "TorsionOrder") return {true, n, 0};
    return none_up_to(n);
}

TorsionVerdict torsion_probe_exact(const EllipticCurve& curve, const CurvePoint& p, int bound) {
    if (bound < 1) throw std::invalid_argument("torsion bound must be >= 1");
    require_on_curve(curve, p);
    CurvePoint multiple = p;
    for (int n = 1; n <= bound; ++n) {
        if (multiple.is_infinity()) return TorsionVerdict::order_of(n, bound);
        if (n < bound) multiple = add_unchecked(curve, multiple, p);
    }
    return TorsionVerdict::none_up_to(bound);
}

namespace {

// Arithmetic in F_p for p < 2^31.
struct Fp {
    std::uint64_t p;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (; e > 0; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

    std::optional<std::uint64_t> reduce(const Rational& q) const {
        const unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (den == 0) return std::nullopt;
        return mul(mpz_fdiv_ui(q.get_num().get_mpz_t(), p), inv(den));
    }
    // Image of a field element under lambda -> r.
    std::optional<std::uint64_t> reduce(const NFElement& e, std::uint64_t r) const {
        std::uint64_t acc = 0;
        const auto& c = e.coords();
        for (std::size_t i = c.size(); i-- > 0;) {
            const auto ci = reduce(c[i]);
            if (!ci) return std::nullopt;
            acc = add(mul(acc, r), *ci);
        }
        return acc;
    }
};

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct ModPoint {
    bool inf = true;
    std::uint64_t x = 0, y = 0;
};

ModPoint mod_add(const Fp& f, std::uint64_t a2, std::uint64_t a4, const ModPoint& p, const ModPoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    std::uint64_t slope;
    if (p.x == q.x) {
        if (f.add(p.y, q.y) == 0) return {};
        const std::uint64_t num = f.add(f.add(f.mul(3, f.mul(p.x, p.x)), f.mul(2, f.mul(a2, p.x))), a4);
        slope = f.mul(num, f.inv(f.mul(2, p.y)));
    } else {
        slope = f.mul(f.sub(q.y, p.y), f.inv(f.sub(q.x, p.x)));
    }
    const std::uint64_t x3 = f.sub(f.sub(f.sub(f.mul(slope, slope), a2), p.x), q.x);
    const std::uint64_t y3 = f.sub(f.mul(slope, f.sub(p.x, x3)), p.y);
    return {false, x3, y3};
}

// Order of the reduction of P at some degree-one prime above p, if the
// curve has good reduction there and P is integral; 0 means "> bound".
std::optional<int> reduced_order(const EllipticCurve& curve, const CurvePoint& pt, std::uint64_t p, int bound) {
    const Fp f{p};
    const UniPoly& minpoly = curve.field()->minpoly();
    const auto delta = f.reduce(Rational(pt.delta()));
    if (!delta || *delta == 0) return std::nullopt;
    if (f.pow(*delta, (p - 1) / 2) != 1) return std::nullopt;
    std::uint64_t s = 1;
    while (f.mul(s, s) != *delta) ++s;

    for (std::uint64_t r = 0; r < p; ++r) {
        std::uint64_t v = 0;
        bool ok = true;
        for (int i = minpoly.degree(); i >= 0 && ok; --i) {
            const auto ci = f.reduce(minpoly.coeff(i));
            if (!ci) ok = false;
            else v = f.add(f.mul(v, r), *ci);
        }
        if (!ok) return std::nullopt;
        if (v != 0) continue;

        const auto a2 = f.reduce(curve.a2(), r), a4 = f.reduce(curve.a4(), r), a6 = f.reduce(curve.a6(), r);
        if (!a2 || !a4 || !a6) return std::nullopt;
        // Discriminant of x^3 + a2 x^2 + a4 x + a6.
        const std::uint64_t disc = f.sub(
            f.add(f.mul(f.mul(*a2, *a2), f.mul(*a4, *a4)), f.mul(18, f.mul(f.mul(*a2, *a4), *a6))),
            f.add(f.add(f.mul(4, f.pow(*a4, 3)), f.mul(4, f.mul(f.pow(*a2, 3), *a6))), f.mul(27, f.mul(*a6, *a6))));
        if (disc == 0) return std::nullopt;

        auto reduce_ext = [&](const QuadExtElement& e) -> std::optional<std::uint64_t> {
            const auto b = f.reduce(e.base(), r), rad = f.reduce(e.radical(), r);
            if (!b || !rad) return std::nullopt;
            return f.add(*b, f.mul(*rad, s));
        };
        const auto x = reduce_ext(pt.x()), y = reduce_ext(pt.y());
        if (!x || !y) return std::nullopt;

        const ModPoint base{false, *x, *y};
        ModPoint m = base;
        for (int n = 1; n <= bound; ++n) {
            if (m.inf) return n;
            m = mod_add(f, *a2, *a4, m, base);
        }
        return 0;
    }
    return std::nullopt;
}

constexpr std::uint64_t kFirstSievePrime = 1009;
constexpr int kSievePrimes = 12;
constexpr std::uint64_t kLastSievePrime = 200000;

}  // namespace

TorsionVerdict torsion_probe(const EllipticCurve& curve, const CurvePoint& p, int bound) {
    if (bound < 1) throw std::invalid_argument("torsion bound must be >= 1");
    require_on_curve(curve, p);
    if (p.is_infinity()) return TorsionVerdict::order_of(1, bound);

    // Reduction is a homomorphism, so nP = O forces n to be a multiple of
    // every reduced order.
    std::vector<bool> possible(static_cast<std::size_t>(bound) + 1, true);
    int used = 0;
    for (std::uint64_t q = kFirstSievePrime; q < kLastSievePrime && used < kSievePrimes; q += 2) {
        if (!is_prime_small(q)) continue;
        const auto order = reduced_order(curve, p, q, bound);
        if (!order) continue;
        ++used;
        if (*order == 0) return TorsionVerdict::none_up_to(bound);
        for (int n = 1; n <= bound; ++n)
            if (n % *order != 0) possible[static_cast<std::size_t>(n)] = false;
    }
    for (int n = 1; n <= bound; ++n) {
        if (!possible[static_cast<std::size_t>(n)]) continue;
        if (scalar_mul(curve, n, p).is_infinity()) return TorsionVerdict::order_of(n, bound);
    }
    return TorsionVerdict::none_up_to(bound);
}

}  // namespace abrank
