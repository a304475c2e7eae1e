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

#ifndef ABRANK_KUMMER_HPP
#define ABRANK_KUMMER_HPP

#include <string>
#include <vector>

#include "abrank/rational.hpp"
#include "abrank/unipoly.hpp"

namespace abrank {

/// Genus of the normalization of the diagonal curve C_n on
/// (E_1 x ... x E_n)/(+-1): 2^(n-3) (n - 4) + 1. Throws for n < 2.
Integer genus_formula(int n);

/// Riemann-Hurwitz for the (Z/2)^(n-1) cover of P^1 branched over the n
/// points lambda_i (and 0, 1, infinity collapsing): 2g - 2 = 2^(n-1)(-2) + n 2^(n-2).
bool rh_check(int n);

/// u_i^2 = (v - lambda_1 t)(v - lambda_{i+1} t), i = 1..n-1.
struct KummerEquation {
    Rational lambda_first, lambda_other;
    std::string to_string(std::size_t index) const;
};

struct KummerCurveSystem {
    std::vector<Rational> lambdas;
    std::vector<KummerEquation> equations;

    /// Affine model z_{1i}^2 = x^2 (x - 1)^2 (x - lambda_1)(x - lambda_i), one polynomial per i >= 2.
    std::vector<UniPoly> affine_model() const;
};

/// Throws std::invalid_argument "curves not pairwise non-isomorphic" for repeated
/// lambdas, or for lambda in {0, 1}.
KummerCurveSystem build_cn(const std::vector<Rational>& lambdas);

}  // namespace abrank

#endif  // ABRANK_KUMMER_HPP
