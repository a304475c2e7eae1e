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

#ifndef ABRANK_KPOLY_HPP
#define ABRANK_KPOLY_HPP

#include <vector>

#include "abrank/number_field.hpp"
#include "abrank/unipoly.hpp"

namespace abrank {

/// Polynomial in one variable with coefficients in K = Q[lambda]/(minpoly),
/// stored as sum_i parts[i] * lambda^i with parts[i] in Q[t], i < [K:Q].
class KPoly {
   public:
    explicit KPoly(FieldPtr field);
    KPoly(FieldPtr field, std::vector<UniPoly> parts);
    /// p(t) * lambda^k, reduced.
    static KPoly lambda_power(FieldPtr field, unsigned k, const UniPoly& p = UniPoly::constant(1));

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<UniPoly>& parts() const noexcept { return parts_; }
    bool is_zero() const;

    friend KPoly operator+(const KPoly& x, const KPoly& y);
    friend KPoly operator-(const KPoly& x, const KPoly& y);
    friend KPoly operator*(const KPoly& x, const KPoly& y);
    friend KPoly operator*(const UniPoly& s, const KPoly& x);
    friend bool operator==(const KPoly& x, const KPoly& y);

    /// Substitutes t = t0.
    NFElement operator()(const Rational& t0) const;

   private:
    FieldPtr field_;
    std::vector<UniPoly> parts_;
};

}  // namespace abrank

#endif  // ABRANK_KPOLY_HPP
