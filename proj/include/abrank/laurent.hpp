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

#ifndef ABRANK_LAURENT_HPP
#define ABRANK_LAURENT_HPP

#include <string>
#include <vector>

#include "abrank/rational.hpp"
#include "abrank/unipoly.hpp"

namespace abrank {

inline constexpr int kDefaultLaurentPrecision = 12;
/// Arithmetic refuses to produce a nonzero series with fewer known terms.
inline constexpr int kMinSignificantTerms = 4;

/// Truncated Laurent series in t over Q:
///   sum_{k=0}^{precision-1} coeffs[k] t^(valuation+k) + O(t^(valuation+precision)).
/// The leading coefficient is nonzero unless the series is zero to the
/// known order, in which case coeffs is empty and only order() is meaningful.
class LaurentSeries {
   public:
    /// Zero with error term O(t^order).
    static LaurentSeries zero(int order);
    LaurentSeries(int valuation, std::vector<Rational> coeffs);
    /// Exact polynomial in t truncated to `precision` terms from its lowest term.
    static LaurentSeries from_poly(const UniPoly& p, int precision = kDefaultLaurentPrecision);
    /// p(1/t) truncated to `precision` terms from its lowest term.
    static LaurentSeries from_poly_at_infinity(const UniPoly& p, int precision = kDefaultLaurentPrecision);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Exponent where the error term starts.
    int order() const noexcept { return order_; }
    int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
    /// Lowest exponent with a nonzero coefficient. Throws for a zero series.
    int valuation() const;
    Rational coeff(int exponent) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a);

    /// Same valuation, same known coefficients, same order.
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    std::string to_string() const;

   private:
    LaurentSeries(int valuation, std::vector<Rational> coeffs, int order);
    static LaurentSeries normalized(int lowest, std::vector<Rational> coeffs, int order);

    int valuation_ = 0;
    std::vector<Rational> coeffs_;
    int order_ = 0;
};

/// Signed valuation; throws std::domain_error "valuation undetermined at this
/// precision" for a series that is zero to its known order.
int laurent_valuation(const LaurentSeries& s);

enum class Branch { Plus, Minus };

/// r with r^2 = s to the known precision; the leading coefficient of r is
/// +sqrt or -sqrt of the leading coefficient of s according to `branch`.
/// Throws for odd valuation ("ramified square root") or a leading
/// coefficient that is not a rational square.
LaurentSeries laurent_sqrt(const LaurentSeries& s, Branch branch);

}  // namespace abrank

#endif  // ABRANK_LAURENT_HPP
