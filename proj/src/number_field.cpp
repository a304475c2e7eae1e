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

#include "abrank/number_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "abrank/squarefree.hpp"

namespace abrank {

namespace {

/// p(x + shift)
UniPoly taylor_shift(const UniPoly& p, const Rational& shift) {
    const UniPoly lin{shift, Rational(1)};
    UniPoly out;
    for (int k = p.degree(); k >= 0; --k) out = out * lin + UniPoly::constant(p.coeff(static_cast<std::size_t>(k)));
    return out;
}

bool divides(const UniPoly& f, const UniPoly& p) { return p.divmod(f).second.is_zero(); }

}  // namespace

std::optional<UniPoly> find_rational_factor(const UniPoly& p) {
    if (p.degree() < 2) return std::nullopt;
    const auto roots = rational_roots(p);
    if (!roots.empty()) {
        // Deterministic witness: smallest height, positive first.
        const auto best = std::min_element(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
            const Integer hx = height(x), hy = height(y);
            return hx != hy ? hx < hy : x > y;
        });
        return UniPoly{-*best, Rational(1)};
    }
    if (p.degree() != 4) return std::nullopt;

    // Depress: p(y - a3/4) = y^4 + P y^2 + Q y + R, then look for
    // (y^2 + k y + l)(y^2 - k y + m).
    const UniPoly monic = p.monic();
    const Rational shift = -monic.coeff(3) / 4;
    const UniPoly dep = taylor_shift(monic, shift);
    const Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);

    std::vector<UniPoly> candidates;  // quadratic factors in y
    const auto disc = rational_sqrt(P * P - 4 * R);
    if (Q == 0 && disc) {
        candidates.push_back(UniPoly{(P - *disc) / 2, 0, 1});
    }
    if (Q == 0) {
        if (auto l = rational_sqrt(R)) {
            for (const Rational& ll : {*l, Rational(-*l)}) {
                if (auto k = rational_sqrt(2 * ll - P)) candidates.push_back(UniPoly{ll, *k, 1});
            }
        }
    } else {
        // z = k^2 is a root of z^3 + 2P z^2 + (P^2 - 4R) z - Q^2.
        const UniPoly resolvent{-Q * Q, P * P - 4 * R, 2 * P, Rational(1)};
        for (const auto& z : rational_roots(resolvent)) {
            auto k = rational_sqrt(z);
            if (!k || *k == 0) continue;
            candidates.push_back(UniPoly{(P + z - Q / *k) / 2, *k, 1});
        }
    }
    for (const auto& fy : candidates) {
        // back to x: y = x - shift
        const UniPoly fx = taylor_shift(fy, -shift);
        if (divides(fx, monic)) return fx;
    }
    return std::nullopt;
}

NumberField::NumberField(Token, UniPoly minpoly) : minpoly_(std::move(minpoly)) {}

FieldPtr NumberField::create(const UniPoly& minpoly) {
    if (minpoly.degree() < 2 || minpoly.degree() > 4)
        throw std::invalid_argument("number field degree must be 2..4, got " + std::to_string(minpoly.degree()));
    if (minpoly.leading() != 1) throw std::invalid_argument("minimal polynomial must be monic: " + minpoly.to_string());
    if (auto factor = find_rational_factor(minpoly))
        throw std::invalid_argument("reducible polynomial " + minpoly.to_string() + ", factor " + factor->to_string());
    return std::make_shared<const NumberField>(Token{}, minpoly);
}

FieldPtr NumberField::rationals() {
    static const FieldPtr q = std::make_shared<const NumberField>(Token{}, UniPoly{0, 1});
    return q;
}

FieldPtr NumberField::quadratic(const Integer& m) { return create(UniPoly{Rational(-m), 0, 1}); }

std::optional<Rational> NumberField::quadratic_radicand() const {
    if (degree() != 2 || minpoly_.coeff(1) != 0) return std::nullopt;
    return -minpoly_.coeff(0);
}

std::vector<Rational> NumberField::reduce(const UniPoly& p) const {
    const auto d = static_cast<std::size_t>(degree());
    std::vector<Rational> out(d);
    const UniPoly r = p.degree() < degree() ? p : p.divmod(minpoly_).second;
    for (std::size_t i = 0; i < d; ++i) out[i] = r.coeff(i);
    return out;
}

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("element without a field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        throw std::invalid_argument("coordinate count does not match field degree");
}

NFElement NFElement::from_rational(FieldPtr field, const Rational& q) {
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
    c[0] = q;
    return NFElement(std::move(field), std::move(c));
}

NFElement NFElement::generator(FieldPtr field) {
    if (field->degree() < 2) throw std::invalid_argument("Q has no generator");
    return from_poly(std::move(field), UniPoly{0, 1});
}

NFElement NFElement::from_poly(FieldPtr field, const UniPoly& p) {
    auto c = field->reduce(p);
    return NFElement(std::move(field), std::move(c));
}

bool NFElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

namespace {

void require_same(const NFElement& x, const NFElement& y) {
    if (!same_field(*x.field(), *y.field()))
        throw std::invalid_argument("field mismatch: " + x.field()->minpoly().to_string() + " vs " +
                                    y.field()->minpoly().to_string());
}

}  // namespace

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

NFElement operator+(const NFElement& x, const NFElement& y) {
    require_same(x, y);
    NFElement r = x;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += y.coords_[i];
    return r;
}

NFElement operator-(const NFElement& x, const NFElement& y) {
    require_same(x, y);
    NFElement r = x;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= y.coords_[i];
    return r;
}

NFElement operator*(const NFElement& x, const NFElement& y) {
    require_same(x, y);
    return NFElement::from_poly(x.field_, x.as_poly() * y.as_poly());
}

NFElement operator*(const Rational& s, const NFElement& x) {
    NFElement r = x;
    for (auto& c : r.coords_) c *= s;
    return r;
}

NFElement operator+(const NFElement& x, const Rational& s) {
    NFElement r = x;
    r.coords_[0] += s;
    return r;
}

NFElement operator-(const NFElement& x, const Rational& s) {
    NFElement r = x;
    r.coords_[0] -= s;
    return r;
}

bool operator==(const NFElement& x, const NFElement& y) {
    require_same(x, y);
    return x.coords_ == y.coords_;
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Track s with s * x == r (mod minpoly) through the remainder sequence.
    UniPoly r0 = field_->minpoly(), r1 = as_poly();
    UniPoly s0, s1 = UniPoly::constant(1);
    while (r1.degree() > 0) {
        auto [q, r] = r0.divmod(r1);
        UniPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw InternalError("minimal polynomial shares a factor with an element");
    return from_poly(field_, s1 * (Rational(1) / r1.coeff(0)));
}

NFElement NFElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement result = from_rational(field_, 1);
    NFElement base = *this;
    while (e > 0) {
        if (e & 1L) result = result * base;
        e >>= 1L;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string NFElement::to_string() const {
    if (field_->degree() == 1) return coords_[0].get_str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i].get_str();
    os << "]";
    return os.str();
}

std::pair<Rational, Rational> split_quadratic(const NFElement& x) {
    if (!x.field()->quadratic_radicand())
        throw std::invalid_argument("split_quadratic needs a field Q(sqrt(m)) with minpoly t^2 - m");
    return {x.coord(0), x.coord(1)};
}

QuadExtElement::QuadExtElement(NFElement base, NFElement radical, Integer delta)
    : base_(std::move(base)), radical_(std::move(radical)), delta_(std::move(delta)) {
    require_same(base_, radical_);
    if (delta_ == 0) throw std::invalid_argument("delta must be nonzero");
    if (delta_ == 1) {
        base_ = base_ + radical_;
        radical_ = NFElement::from_rational(base_.field(), 0);
    }
}

QuadExtElement::QuadExtElement(const NFElement& base, Integer delta)
    : QuadExtElement(base, NFElement::from_rational(base.field(), 0), std::move(delta)) {}

namespace {

void require_same(const QuadExtElement& x, const QuadExtElement& y) {
    if (x.delta() != y.delta())
        throw std::invalid_argument("extension mismatch: sqrt(" + x.delta().get_str() + ") vs sqrt(" +
                                    y.delta().get_str() + ")");
    require_same(x.base(), y.base());
}

}  // namespace

QuadExtElement QuadExtElement::conj() const { return QuadExtElement(base_, -radical_, delta_); }

NFElement QuadExtElement::norm() const { return base_ * base_ - Rational(delta_) * (radical_ * radical_); }

QuadExtElement QuadExtElement::operator-() const { return QuadExtElement(-base_, -radical_, delta_); }

QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) {
    require_same(x, y);
    return QuadExtElement(x.base_ + y.base_, x.radical_ + y.radical_, x.delta_);
}

QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) {
    require_same(x, y);
    return QuadExtElement(x.base_ - y.base_, x.radical_ - y.radical_, x.delta_);
}

QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
    require_same(x, y);
    // (a + b r)(c + d r) = (ac + bd delta) + (ad + bc) r
    return QuadExtElement(x.base_ * y.base_ + Rational(x.delta_) * (x.radical_ * y.radical_),
                          x.base_ * y.radical_ + x.radical_ * y.base_, x.delta_);
}

QuadExtElement operator*(const NFElement& s, const QuadExtElement& x) {
    return QuadExtElement(s * x.base_, s * x.radical_, x.delta_);
}

QuadExtElement operator*(const Rational& s, const QuadExtElement& x) {
    return QuadExtElement(s * x.base_, s * x.radical_, x.delta_);
}

bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
    require_same(x, y);
    return x.base_ == y.base_ && x.radical_ == y.radical_;
}

QuadExtElement QuadExtElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const NFElement n = norm();
    if (n.is_zero()) throw std::domain_error("zero divisor: " + delta_.get_str() + " is a square in the base field");
    const NFElement ninv = n.inverse();
    return QuadExtElement(base_ * ninv, -(radical_ * ninv), delta_);
}

std::string QuadExtElement::to_string() const {
    if (radical_.is_zero()) return base_.to_string();
    return base_.to_string() + " + " + radical_.to_string() + "*sqrt(" + delta_.get_str() + ")";
}

std::optional<bool> delta_is_square_in(const NumberField& field, const Integer& delta) {
    if (is_square(delta)) return true;
    switch (field.degree()) {
        case 1:
        case 3:
            // An odd-degree field contains no quadratic subfield.
            return false;
        case 2: {
            const UniPoly& mp = field.minpoly();
            const Rational disc = mp.coeff(1) * mp.coeff(1) - 4 * mp.coeff(0);
            return rational_sqrt(Rational(delta) * disc).has_value();
        }
        case 4: {
            // sqrt(delta) in K iff the minimal polynomial splits into two
            // conjugate quadratics over Q(sqrt(delta)).
            const UniPoly dep = taylor_shift(field.minpoly(), -field.minpoly().coeff(3) / 4);
            const Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);
            const Integer target = squarefree_part(delta);
            if (Q == 0) {
                const Rational disc = P * P - 4 * R;
                if (disc != 0 && rational_squarefree_part(disc) == target) return true;
            }
            const UniPoly resolvent{-Q * Q, P * P - 4 * R, 2 * P, Rational(1)};
            for (const auto& z : rational_roots(resolvent)) {
                if (z != 0 && rational_squarefree_part(z) == target) return true;
            }
            return false;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace abrank
