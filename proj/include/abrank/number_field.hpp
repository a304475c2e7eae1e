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

#ifndef ABRANK_NUMBER_FIELD_HPP
#define ABRANK_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abrank/rational.hpp"
#include "abrank/unipoly.hpp"

namespace abrank {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// K = Q[lambda]/(minpoly) with minpoly monic and irreducible. Degree 1
/// (minpoly t) stands for Q itself and is only available via rationals().
class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    /// Validates degree 2..4, monicity and irreducibility. A reducible
    /// polynomial is rejected with a witness factor in the message.
    static FieldPtr create(const UniPoly& minpoly);
    static FieldPtr rationals();
    /// Q(sqrt(m)) with minpoly t^2 - m; m must not be a rational square.
    static FieldPtr quadratic(const Integer& m);

    const UniPoly& minpoly() const noexcept { return minpoly_; }
    int degree() const noexcept { return minpoly_.degree(); }
    /// For a field of the form Q(sqrt(m)) (minpoly t^2 - m), returns m.
    std::optional<Rational> quadratic_radicand() const;

    /// Reduces an arbitrary polynomial in lambda to power-basis coordinates.
    std::vector<Rational> reduce(const UniPoly& p) const;

    friend bool same_field(const NumberField& a, const NumberField& b) {
        return &a == &b || a.minpoly_ == b.minpoly_;
    }

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

   private:
    struct Token {};

   public:
    NumberField(Token, UniPoly minpoly);

   private:
    UniPoly minpoly_;
};

/// A monic factor of degree 1 or 2 of a monic polynomial of degree <= 4, if one exists over Q.
std::optional<UniPoly> find_rational_factor(const UniPoly& p);

/// Element of a number field in the power basis 1, lambda, ..., lambda^(d-1).
class NFElement {
   public:
    NFElement(FieldPtr field, std::vector<Rational> coords);
    static NFElement from_rational(FieldPtr field, const Rational& q);
    static NFElement generator(FieldPtr field);
    static NFElement from_poly(FieldPtr field, const UniPoly& p);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& coord(std::size_t i) const { return coords_.at(i); }
    bool is_zero() const;
    bool is_rational() const;
    UniPoly as_poly() const { return UniPoly(coords_); }

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& x, const NFElement& y);
    friend NFElement operator-(const NFElement& x, const NFElement& y);
    friend NFElement operator*(const NFElement& x, const NFElement& y);
    friend NFElement operator*(const Rational& s, const NFElement& x);
    friend NFElement operator+(const NFElement& x, const Rational& s);
    friend NFElement operator-(const NFElement& x, const Rational& s);
    friend NFElement operator/(const NFElement& x, const NFElement& y) { return x * y.inverse(); }
    friend bool operator==(const NFElement& x, const NFElement& y);

    /// Via extended Euclid against the minimal polynomial; throws on zero.
    NFElement inverse() const;
    NFElement pow(long e) const;

    std::string to_string() const;

   private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline NFElement nf_mul(const NFElement& x, const NFElement& y) { return x * y; }
inline NFElement nf_inv(const NFElement& x) { return x.inverse(); }

/// (rational part, sqrt(m) coefficient) in Q(sqrt(m)).
std::pair<Rational, Rational> split_quadratic(const NFElement& x);

/// a + b*sqrt(delta) over a base field K with delta a squarefree integer.
/// delta = 1 denotes K itself; the radical is folded into the base part.
class QuadExtElement {
   public:
    QuadExtElement(NFElement base, NFElement radical, Integer delta);
    /// Embeds a K-element.
    QuadExtElement(const NFElement& base, Integer delta);

    const NFElement& base() const noexcept { return base_; }
    const NFElement& radical() const noexcept { return radical_; }
    const Integer& delta() const noexcept { return delta_; }
    const FieldPtr& field() const noexcept { return base_.field(); }
    bool is_zero() const { return base_.is_zero() && radical_.is_zero(); }
    bool in_base_field() const { return radical_.is_zero(); }

    QuadExtElement conj() const;
    /// a^2 - b^2 delta, in K.
    NFElement norm() const;

    QuadExtElement operator-() const;
    friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y);
    friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y);
    friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y);
    friend QuadExtElement operator*(const NFElement& s, const QuadExtElement& x);
    friend QuadExtElement operator*(const Rational& s, const QuadExtElement& x);
    friend QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y) { return x * y.inverse(); }
    friend bool operator==(const QuadExtElement& x, const QuadExtElement& y);

    /// Throws std::domain_error if the norm vanishes, which for nonzero x
    /// means delta is a square in K.
    QuadExtElement inverse() const;

    std::string to_string() const;

   private:
    NFElement base_;
    NFElement radical_;
    Integer delta_;
};

inline QuadExtElement quadext_mul(const QuadExtElement& x, const QuadExtElement& y) { return x * y; }

/// Decides whether the integer delta is a square in K (degree 1 to 4).
std::optional<bool> delta_is_square_in(const NumberField& field, const Integer& delta);

}  // namespace abrank

#endif  // ABRANK_NUMBER_FIELD_HPP
