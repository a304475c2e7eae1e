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

#include "abrank/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abrank {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {UniPoly{}, *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(coeffs_.size() - divisor.coeffs_.size() + 1);
    const Rational lead_inv = Rational(1) / divisor.leading();
    const std::size_t dd = divisor.coeffs_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational c = rem[k + dd] * lead_inv;
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
    if (p.is_zero()) return UniPoly{};
    if (p.degree() % 2 != 0) return std::nullopt;
    const auto lead_root = rational_sqrt(p.leading());
    if (!lead_root) return std::nullopt;

    // Top-down: r_{n-k} from the t^{2n-k} coefficient.
    const std::size_t n = static_cast<std::size_t>(p.degree()) / 2;
    std::vector<Rational> r(n + 1);
    r[n] = *lead_root;
    const Rational two_lead = 2 * r[n];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = p.coeff(2 * n - k);
        for (std::size_t i = 1; i < k; ++i) acc -= r[n - i] * r[n - k + i];
        r[n - k] = acc / two_lead;
    }
    UniPoly root(std::move(r));
    if (root * root != p) return std::nullopt;
    return root;
}

namespace {

/// Prime factorization of |n| > 0 by trial division.
std::map<Integer, unsigned> factor_small(Integer n) {
    std::map<Integer, unsigned> out;
    n = abs(n);
    Integer p = 2;
    unsigned long steps = 0;
    while (p * p <= n) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
        p += (p == 2) ? 1 : 2;
        if (++steps > 20'000'000UL) throw std::domain_error("coefficient too large for rational root search");
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [prime, e] : factor_small(n)) {
        const std::size_t count = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has every root");
    std::vector<Rational> roots;
    // Clear denominators and strip the root at zero.
    Integer lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) ic.push_back(Integer(c * lcm_den));
    std::size_t shift = 0;
    while (shift < ic.size() && ic[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    if (ic.size() - shift <= 1) return roots;

    const UniPoly reduced(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end()));
    const auto num_divs = divisors(ic[shift]);
    const auto den_divs = divisors(ic.back());
    for (const auto& a : num_divs) {
        for (const auto& b : den_divs) {
            for (int sign : {1, -1}) {
                const Rational cand = make_rational(a * sign, b);
                if (reduced(cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace abrank
