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

#ifndef ABRANK_VERIFY_SUITES_HPP
#define ABRANK_VERIFY_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abrank/cubic_construct.hpp"
#include "abrank/curve_spec.hpp"
#include "abrank/quad_construct.hpp"
#include "abrank/quartic_construct.hpp"

namespace abrank {

/// Random rational n/d with |n| <= height and 1 <= d <= den_height.
Rational random_rational(std::mt19937_64& rng, int height, int den_height = 1);

/// Irreducible t^3 - a t^2 + b t - c with coefficient heights <= height.
CubicInput random_cubic_input(std::mt19937_64& rng, int height = 10, int den_height = 1);
/// Irreducible monic quartic with coefficient heights <= height.
QuarticInput random_quartic_input(std::mt19937_64& rng, int height = 10, int den_height = 1);
/// Squarefree m != 1 with |m| <= 30 and c, d != 0; j-invariant not 0 or 1728.
QuadCurveInput random_quad_input(std::mt19937_64& rng, int height = 10, int den_height = 1);

struct CheckResult {
    std::string suite;
    std::string check;
    ordered_json instance;
    bool ok = false;
    std::string detail;
};

struct SuiteOptions {
    int samples = 100;
    std::uint64_t seed = 20240601;
    /// Negative control: perturb the A1 closed form before it is compared.
    bool corrupt_a1 = false;
};

/// suite is one of quad, cubic, quartic, genus, all.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options);

ordered_json to_json(const CheckResult& r);

}  // namespace abrank

#endif  // ABRANK_VERIFY_SUITES_HPP
