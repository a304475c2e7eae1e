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

#ifndef ABRANK_ELLIPTIC_HPP
#define ABRANK_ELLIPTIC_HPP

#include <optional>
#include <string>

#include "abrank/number_field.hpp"

namespace abrank {

enum class CurveModel { ShortWeierstrass, Legendre };

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over a number field K, built either as
/// y^2 = x^3 + alpha x + beta or as y^2 = x(x - 1)(x - lambda).
class EllipticCurve {
   public:
    /// Throws std::domain_error if singular.
    static EllipticCurve short_weierstrass(const NFElement& alpha, const NFElement& beta);
    /// Throws std::domain_error unless lambda is not 0 or 1.
    static EllipticCurve legendre(const NFElement& lambda);

    CurveModel model() const noexcept { return model_; }
    const FieldPtr& field() const noexcept { return a2_.field(); }
    const NFElement& a2() const noexcept { return a2_; }
    const NFElement& a4() const noexcept { return a4_; }
    const NFElement& a6() const noexcept { return a6_; }

    /// x -> x + shift takes this curve to y^2 = X^3 + A X + B.
    struct ShortForm {
        NFElement alpha;
        NFElement beta;
        NFElement shift;
    };
    ShortForm to_short_weierstrass() const;
    /// -16 (4A^3 + 27B^2) of the short form.
    NFElement discriminant() const;

    /// Right-hand side x^3 + a2 x^2 + a4 x + a6 at x.
    QuadExtElement rhs(const QuadExtElement& x) const;

    std::string to_string() const;

   private:
    EllipticCurve(CurveModel model, NFElement a2, NFElement a4, NFElement a6);
    CurveModel model_;
    NFElement a2_, a4_, a6_;
};

/// The point at infinity, or an affine point with coordinates in K(sqrt(delta)).
class CurvePoint {
   public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(QuadExtElement x, QuadExtElement y);

    bool is_infinity() const noexcept { return !affine_.has_value(); }
    const QuadExtElement& x() const { return affine_->first; }
    const QuadExtElement& y() const { return affine_->second; }
    /// 1 for infinity and for points over K.
    Integer delta() const;

    CurvePoint operator-() const;
    friend bool operator==(const CurvePoint& p, const CurvePoint& q);

    std::string to_string() const;

   private:
    CurvePoint() = default;
    std::optional<std::pair<QuadExtElement, QuadExtElement>> affine_;
};

/// Exact check of y^2 = x^3 + a2 x^2 + a4 x + a6. Throws std::invalid_argument
/// if the point lives over a different base field.
bool on_curve(const EllipticCurve& curve, const CurvePoint& p);

/// Chord-and-tangent addition. Points over K(sqrt(d)) and over K mix;
/// points over two different nontrivial extensions do not.
CurvePoint point_add(const EllipticCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const EllipticCurve& curve, long n, const CurvePoint& p);

/// 1728 * 4A^3 / (4A^3 + 27B^2) of the short Weierstrass form.
NFElement j_invariant(const EllipticCurve& curve);

inline constexpr int kDefaultTorsionBound = 24;

/// Outcome of a bounded torsion search. Never claims a point is of infinite order.
struct TorsionVerdict {
    bool torsion = false;
    int order = 0;  ///< minimal n with nP = O when torsion
    int bound = 0;

    static TorsionVerdict order_of(int n, int bound) { return {true, n, bound}; }
    static TorsionVerdict none_up_to(int bound) { return {false, 0, bound}; }
    friend bool operator==(const TorsionVerdict& a, const TorsionVerdict& b) {
        return a.torsion == b.torsion && (a.torsion ? a.order == b.order : a.bound == b.bound);
    }
    /// "TorsionOrder(n)" or "NoTorsionUpTo(B)".
    std::string to_string() const;
    static TorsionVerdict parse(const std::string& text);
};

/// Smallest n <= bound with nP = O. Reductions of P at degree-one primes of
/// good reduction rule out every n that is not a multiple of all the reduced
/// orders; the survivors are checked exactly.
TorsionVerdict torsion_probe(const EllipticCurve& curve, const CurvePoint& p, int bound = kDefaultTorsionBound);

/// Reference probe: repeated exact addition. Same verdict, much slower.
TorsionVerdict torsion_probe_exact(const EllipticCurve& curve, const CurvePoint& p,
                                   int bound = kDefaultTorsionBound);

}  // namespace abrank

#endif  // ABRANK_ELLIPTIC_HPP
