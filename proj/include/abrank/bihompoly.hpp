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

#ifndef ABRANK_BIHOMPOLY_HPP
#define ABRANK_BIHOMPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "abrank/rational.hpp"
#include "abrank/unipoly.hpp"

namespace abrank {

/// Homogeneous polynomial in (u, v) over Q of a fixed degree D.
/// coeffs()[i] is the coefficient of u^i v^(D-i). The zero polynomial of
/// degree D is allowed and keeps its degree.
class BiHomPoly {
   public:
    explicit BiHomPoly(unsigned degree = 0);
    BiHomPoly(unsigned degree, std::vector<Rational> coeffs);
    static BiHomPoly u();
    static BiHomPoly v();
    static BiHomPoly constant(const Rational& c);

    unsigned degree() const noexcept { return degree_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(unsigned u_exp) const { return coeffs_.at(u_exp); }
    bool is_zero() const;

    Rational operator()(const Rational& u, const Rational& v) const;

    BiHomPoly operator-() const;
    /// Sums require equal degrees.
    BiHomPoly& operator+=(const BiHomPoly& rhs);
    BiHomPoly& operator-=(const BiHomPoly& rhs);
    BiHomPoly& operator*=(const Rational& s);
    friend BiHomPoly operator+(BiHomPoly lhs, const BiHomPoly& rhs) { return lhs += rhs; }
    friend BiHomPoly operator-(BiHomPoly lhs, const BiHomPoly& rhs) { return lhs -= rhs; }
    friend BiHomPoly operator*(const BiHomPoly& lhs, const BiHomPoly& rhs);
    friend BiHomPoly operator*(BiHomPoly lhs, const Rational& s) { return lhs *= s; }
    friend BiHomPoly operator*(const Rational& s, BiHomPoly rhs) { return rhs *= s; }
    friend bool operator==(const BiHomPoly&, const BiHomPoly&) = default;

    BiHomPoly pow(unsigned e) const;

    /// Q(m*u, v)
    BiHomPoly scale_u(const Rational& m) const;
    /// Q(v, u)
    BiHomPoly swap() const;
    /// f(t) = Q(t, 1).
    UniPoly dehomogenize() const;

    std::string to_string() const;

   private:
    unsigned degree_;
    std::vector<Rational> coeffs_;
};

/// True iff Q(m u, v) = m^w Q(v, u) coefficientwise.
bool check_functional_eq(const BiHomPoly& q, const Integer& m, unsigned weight);

/// Square root over Q. Q = v^k * F(u, v) with v not dividing F; Q is a
/// square iff k is even and F(t, 1) is a square in Q[t].
std::optional<BiHomPoly> poly_sqrt(const BiHomPoly& q);
inline bool poly_not_square(const BiHomPoly& q) { return !poly_sqrt(q).has_value(); }

}  // namespace abrank

#endif  // ABRANK_BIHOMPOLY_HPP
