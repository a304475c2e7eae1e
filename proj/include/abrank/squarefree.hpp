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

#ifndef ABRANK_SQUAREFREE_HPP
#define ABRANK_SQUAREFREE_HPP

#include "abrank/rational.hpp"

namespace abrank {

/// How much of a squarefree decomposition was proven.
enum class FactorStatus {
    Verified,  ///< every prime factor found or the leftover cofactor is provably squarefree
    Probable,  ///< leftover cofactor passed a probabilistic primality or size argument only
};

const char* to_string(FactorStatus status);

/// n = delta * root^2 with delta squarefree and sign(delta) = sign(n).
struct SquarefreeDecomposition {
    Integer delta;
    Integer root;  ///< non-negative
    FactorStatus status = FactorStatus::Verified;
};

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

/// Trial division up to `trial_bound`, then a perfect-square test and a
/// primality test on the leftover cofactor. A composite cofactor >= bound^3
/// that is not a perfect square is treated as squarefree and flagged Probable.
SquarefreeDecomposition squarefree_decompose(const Integer& n, unsigned long trial_bound = kDefaultTrialBound);

Integer squarefree_part(const Integer& n, unsigned long trial_bound = kDefaultTrialBound);

/// Q(sqrt(a/b)) = Q(sqrt(ab)), so this is squarefree_part(num * den).
Integer rational_squarefree_part(const Rational& q, unsigned long trial_bound = kDefaultTrialBound);

/// q = delta * root^2 with root rational and positive.
struct RationalSquarefree {
    Integer delta;
    Rational root;
    FactorStatus status = FactorStatus::Verified;
};

RationalSquarefree rational_squarefree_decompose(const Rational& q,
                                                 unsigned long trial_bound = kDefaultTrialBound);

bool is_squarefree(const Integer& n, unsigned long trial_bound = kDefaultTrialBound);

}  // namespace abrank

#endif  // ABRANK_SQUAREFREE_HPP
