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

#include "abrank/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abrank {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int order)
    : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {}

LaurentSeries LaurentSeries::normalized(int lowest, std::vector<Rational> coeffs, int order) {
    std::size_t skip = 0;
    while (skip < coeffs.size() && coeffs[skip] == 0) ++skip;
    if (skip == coeffs.size()) return zero(order);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(skip));
    const int val = lowest + static_cast<int>(skip);
    coeffs.resize(static_cast<std::size_t>(order - val));
    if (static_cast<int>(coeffs.size()) < kMinSignificantTerms)
        throw std::domain_error("Laurent precision exhausted: fewer than " + std::to_string(kMinSignificantTerms) +
                                " significant terms");
    return LaurentSeries(val, std::move(coeffs), order);
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(0, {}, order); }

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs) {
    const int order = valuation + static_cast<int>(coeffs.size());
    *this = normalized(valuation, std::move(coeffs), order);
}

LaurentSeries LaurentSeries::from_poly(const UniPoly& p, int precision) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no leading term");
    int low = 0;
    while (p.coeff(static_cast<std::size_t>(low)) == 0) ++low;
    std::vector<Rational> c(static_cast<std::size_t>(precision));
    for (int k = 0; k < precision; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(low + k));
    return LaurentSeries(low, std::move(c), low + precision);
}

LaurentSeries LaurentSeries::from_poly_at_infinity(const UniPoly& p, int precision) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no leading term");
    // p(1/t) = sum c_i t^-i; lowest exponent is -deg.
    const int deg = p.degree();
    std::vector<Rational> c(static_cast<std::size_t>(precision));
    for (int k = 0; k < precision && deg - k >= 0; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(deg - k));
    return LaurentSeries(-deg, std::move(c), -deg + precision);
}

int LaurentSeries::valuation() const {
    if (is_zero()) throw std::domain_error("valuation undetermined at this precision");
    return valuation_;
}

Rational LaurentSeries::coeff(int exponent) const {
    if (exponent >= order_) throw std::domain_error("coefficient beyond known precision");
    if (is_zero() || exponent < valuation_) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, int sign) {
    const int order = std::min(a.order(), b.order());
    int low = order;
    if (!a.is_zero()) low = std::min(low, a.valuation());
    if (!b.is_zero()) low = std::min(low, b.valuation());
    if (low >= order) return LaurentSeries::zero(order);
    std::vector<Rational> c(static_cast<std::size_t>(order - low));
    for (int e = low; e < order; ++e) {
        Rational x = a.coeff(e);
        if (sign > 0) x += b.coeff(e);
        else x -= b.coeff(e);
        c[static_cast<std::size_t>(e - low)] = x;
    }
    return LaurentSeries(low, std::move(c));
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, +1); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, -1); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_zero() || b.is_zero()) {
        const int order = a.is_zero() ? (b.is_zero() ? a.order() + b.order() : a.order() + b.valuation_)
                                      : a.valuation_ + b.order();
        return LaurentSeries::zero(order);
    }
    const int val = a.valuation_ + b.valuation_;
    const int order = std::min(a.valuation_ + b.order_, b.valuation_ + a.order_);
    const auto n = static_cast<std::size_t>(order - val);
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentSeries::normalized(val, std::move(c), order);
}

LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
    if (s == 0) return LaurentSeries::zero(a.order());
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        os << (coeffs_[k] < 0 ? "- " : "+ ") << Rational(abs(coeffs_[k])).get_str() << "*t^" << valuation_ + static_cast<int>(k)
           << " ";
    }
    os << "+ O(t^" << order_ << ")";
    return os.str();
}

int laurent_valuation(const LaurentSeries& s) { return s.valuation(); }

LaurentSeries laurent_sqrt(const LaurentSeries& s, Branch branch) {
    const int val = s.valuation();
    if (val % 2 != 0) throw std::domain_error("ramified square root");
    const auto& c = s.coeffs();
    auto lead = rational_sqrt(c[0]);
    if (!lead) throw std::domain_error("leading coefficient " + to_string(c[0]) + " is not a rational square");
    const std::size_t n = c.size();
    std::vector<Rational> r(n);
    r[0] = branch == Branch::Plus ? *lead : Rational(-*lead);
    const Rational two_r0 = 2 * r[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = c[k];
        for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
        r[k] = acc / two_r0;
    }
    // r = t^(val/2) * (...), known to the same relative precision as s.
    return LaurentSeries(val / 2, std::move(r));
}

}  // namespace abrank
