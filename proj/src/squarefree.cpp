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

#include "abrank/squarefree.hpp"

#include <stdexcept>

namespace abrank {

const char* to_string(FactorStatus status) {
    return status == FactorStatus::Verified ? "verified" : "probable";
}

SquarefreeDecomposition squarefree_decompose(const Integer& n, unsigned long trial_bound) {
    if (n == 0) throw std::domain_error("zero has no quadratic field");

    Integer rest = abs(n);
    Integer delta = 1;
    Integer root = 1;

    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e == 0) return;
        if (e % 2 == 1) delta *= p;
        for (unsigned i = 0; i < e / 2; ++i) root *= p;
    };

    strip(2);
    for (unsigned long p = 3; p <= trial_bound; p += 2) {
        if (rest == 1) break;
        if (Integer(p) * p > rest) break;
        strip(p);
    }

    FactorStatus status = FactorStatus::Verified;
    if (rest > 1) {
        // rest has no prime factor <= min(trial_bound, sqrt(rest)) at this point.
        const Integer bound(trial_bound);
        if (rest <= bound * bound) {
            delta *= rest;  // prime
        } else if (is_square(rest)) {
            root *= Integer(sqrt(rest));
        } else if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 2 || rest < bound * bound * bound) {
            // Proven prime, or a product of at most two primes above the bound
            // that is not a square: squarefree either way.
            delta *= rest;
        } else {
            // Prime with overwhelming probability, or a product p^2 q we cannot rule out.
            status = FactorStatus::Probable;
            delta *= rest;
        }
    }
    if (n < 0) delta = -delta;
    return {delta, root, status};
}

Integer squarefree_part(const Integer& n, unsigned long trial_bound) {
    return squarefree_decompose(n, trial_bound).delta;
}

Integer rational_squarefree_part(const Rational& q, unsigned long trial_bound) {
    if (q == 0) throw std::domain_error("zero has no quadratic field");
    return squarefree_part(q.get_num() * q.get_den(), trial_bound);
}

RationalSquarefree rational_squarefree_decompose(const Rational& q, unsigned long trial_bound) {
    if (q == 0) throw std::domain_error("zero has no quadratic field");
    // a/b = ab / b^2
    const auto dec = squarefree_decompose(q.get_num() * q.get_den(), trial_bound);
    return {dec.delta, make_rational(dec.root, q.get_den()), dec.status};
}

bool is_squarefree(const Integer& n, unsigned long trial_bound) {
    if (n == 0) return false;
    return squarefree_decompose(n, trial_bound).root == 1;
}

}  // namespace abrank
