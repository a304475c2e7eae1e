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

#ifndef ABRANK_TESTS_SUPPORT_HPP
#define ABRANK_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "abrank/rational.hpp"
#include "abrank/unipoly.hpp"

namespace abrank::test {

inline Rational R(const char* text) { return parse_rational(text); }
inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

inline UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly(std::move(c));
}

inline Rational random_q(std::mt19937_64& rng, long h = 9, long dh = 4) {
    std::uniform_int_distribution<long> n(-h, h), d(1, dh);
    return make_rational(n(rng), d(rng));
}

inline UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = random_q(rng);
    return UniPoly(std::move(c));
}

}  // namespace abrank::test

#endif  // ABRANK_TESTS_SUPPORT_HPP
