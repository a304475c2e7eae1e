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

#ifndef ABRANK_UNIPOLY_HPP
#define ABRANK_UNIPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abrank/rational.hpp"

namespace abrank {

/// Dense univariate polynomial over Q. coeffs()[i] is the t^i coefficient;
/// the zero polynomial has no coefficients.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);
    /// Constant polynomial.
    static UniPoly constant(const Rational& c);
    /// c * t^k
    static UniPoly monomial(const Rational& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the degree.
    Rational coeff(std::size_t i) const;
    Rational leading() const;

    Rational operator()(const Rational& t) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    friend UniPoly operator*(UniPoly lhs, const Rational& s) { return lhs *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly rhs) { return rhs *= s; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly pow(unsigned e) const;
    UniPoly derivative() const;
    /// Monic associate; zero stays zero.
    UniPoly monic() const;

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    std::string to_string(char var = 't') const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly gcd(UniPoly a, UniPoly b);

/// Square root over Q, if p = r^2 with r in Q[t]. The returned root has
/// positive leading coefficient. The zero polynomial is the square of zero.
///
/// Over C the answer can differ, but for the polynomials built by the
/// quadratic construction (odd-weight functional equation, see
/// check_functional_eq) a square over C is already a square over Q, so a
/// negative answer here settles the question over C as well.
std::optional<UniPoly> poly_sqrt(const UniPoly& p);
inline bool poly_not_square(const UniPoly& p) { return !poly_sqrt(p).has_value(); }

/// All distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace abrank

#endif  // ABRANK_UNIPOLY_HPP
