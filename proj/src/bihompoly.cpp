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

#include "abrank/bihompoly.hpp"

#include <sstream>
#include <stdexcept>

namespace abrank {

BiHomPoly::BiHomPoly(unsigned degree) : degree_(degree), coeffs_(degree + 1) {}

BiHomPoly::BiHomPoly(unsigned degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree_ + 1) throw std::invalid_argument("BiHomPoly needs degree + 1 coefficients");
}

BiHomPoly BiHomPoly::u() { return BiHomPoly(1, {0, 1}); }
BiHomPoly BiHomPoly::v() { return BiHomPoly(1, {1, 0}); }
BiHomPoly BiHomPoly::constant(const Rational& c) { return BiHomPoly(0, {c}); }

bool BiHomPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational BiHomPoly::operator()(const Rational& u, const Rational& v) const {
    // Horner in u with v powers accumulated from the top.
    Rational acc = 0;
    Rational vpow = 1;
    std::vector<Rational> vpows(degree_ + 1);
    for (unsigned k = 0; k <= degree_; ++k) {
        vpows[k] = vpow;
        vpow *= v;
    }
    for (unsigned i = degree_ + 1; i-- > 0;) acc = acc * u + coeffs_[i] * vpows[degree_ - i];
    return acc;
}

BiHomPoly BiHomPoly::operator-() const {
    BiHomPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BiHomPoly& BiHomPoly::operator+=(const BiHomPoly& rhs) {
    if (rhs.degree_ != degree_) throw std::invalid_argument("adding homogeneous polynomials of different degree");
    for (unsigned i = 0; i <= degree_; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

BiHomPoly& BiHomPoly::operator-=(const BiHomPoly& rhs) {
    if (rhs.degree_ != degree_) throw std::invalid_argument("subtracting homogeneous polynomials of different degree");
    for (unsigned i = 0; i <= degree_; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

BiHomPoly& BiHomPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

BiHomPoly operator*(const BiHomPoly& lhs, const BiHomPoly& rhs) {
    BiHomPoly out(lhs.degree_ + rhs.degree_);
    for (unsigned i = 0; i <= lhs.degree_; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j <= rhs.degree_; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

BiHomPoly BiHomPoly::pow(unsigned e) const {
    BiHomPoly result = constant(1);
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
}

BiHomPoly BiHomPoly::scale_u(const Rational& m) const {
    BiHomPoly r = *this;
    Rational mp = 1;
    for (unsigned i = 0; i <= degree_; ++i) {
        r.coeffs_[i] *= mp;
        mp *= m;
    }
    return r;
}

BiHomPoly BiHomPoly::swap() const {
    BiHomPoly r(degree_);
    for (unsigned i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[degree_ - i];
    return r;
}

UniPoly BiHomPoly::dehomogenize() const { return UniPoly(coeffs_); }

std::string BiHomPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = degree_ + 1; i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        const unsigned j = degree_ - i;
        if (a != 1 || (i == 0 && j == 0)) os << a.get_str();
        if (i > 0) os << "u" << (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) os << "v" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return first ? "0" : os.str();
}

bool check_functional_eq(const BiHomPoly& q, const Integer& m, unsigned weight) {
    return q.scale_u(Rational(m)) == q.swap() * pow(Rational(m), weight);
}

std::optional<BiHomPoly> poly_sqrt(const BiHomPoly& q) {
    if (q.degree() % 2 != 0) return std::nullopt;
    if (q.is_zero()) return BiHomPoly(q.degree() / 2);
    const UniPoly f = q.dehomogenize();
    const unsigned v_power = q.degree() - static_cast<unsigned>(f.degree());
    if (v_power % 2 != 0) return std::nullopt;
    const auto root = poly_sqrt(f);
    if (!root) return std::nullopt;
    std::vector<Rational> c = root->coeffs();
    c.resize(q.degree() / 2 + 1);
    BiHomPoly r(q.degree() / 2, std::move(c));
    if (r * r != q) throw InternalError("homogeneous square root failed to verify");
    return r;
}

}  // namespace abrank
