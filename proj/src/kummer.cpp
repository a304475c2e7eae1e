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

#include "abrank/kummer.hpp"

#include <set>
#include <stdexcept>

namespace abrank {

Integer genus_formula(int n) {
    if (n < 2) throw std::invalid_argument("genus formula needs n >= 2");
    // 2^(n-3) is 1/2 at n = 2; evaluate in Q and insist on integrality.
    Rational two_pow = n >= 3 ? Rational(Integer(1) << (n - 3)) : Rational(1, 2);
    const Rational g = two_pow * (n - 4) + 1;
    if (g.get_den() != 1) throw InternalError("genus formula is not integral at n = " + std::to_string(n));
    return g.get_num();
}

bool rh_check(int n) {
    if (n < 2) throw std::invalid_argument("Riemann-Hurwitz check needs n >= 2");
    const Integer lhs = 2 * genus_formula(n) - 2;
    const Integer rhs = -2 * (Integer(1) << (n - 1)) + n * (Integer(1) << (n - 2));
    return lhs == rhs;
}

std::string KummerEquation::to_string(std::size_t index) const {
    return "u_" + std::to_string(index) + "^2 = (v - " + lambda_first.get_str() + " t)(v - " + lambda_other.get_str() +
           " t)";
}

std::vector<UniPoly> KummerCurveSystem::affine_model() const {
    std::vector<UniPoly> out;
    const UniPoly x{0, 1};
    const UniPoly common = (x * x) * (x - UniPoly{1}).pow(2) * (x - UniPoly{lambdas[0]});
    for (std::size_t i = 1; i < lambdas.size(); ++i) out.push_back(common * (x - UniPoly{lambdas[i]}));
    return out;
}

KummerCurveSystem build_cn(const std::vector<Rational>& lambdas) {
    if (lambdas.size() < 2) throw std::invalid_argument("need at least two curves");
    std::set<Rational> seen;
    for (const auto& l : lambdas) {
        if (l == 0 || l == 1) throw std::invalid_argument("curves not pairwise non-isomorphic: Legendre parameter 0 or 1");
        if (!seen.insert(l).second) throw std::invalid_argument("curves not pairwise non-isomorphic");
    }
    KummerCurveSystem out{lambdas, {}};
    for (std::size_t i = 1; i < lambdas.size(); ++i) out.equations.push_back({lambdas[0], lambdas[i]});
    return out;
}

}  // namespace abrank
