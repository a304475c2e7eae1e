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

#include "abrank/forged_point.hpp"

#include <numeric>
#include <stdexcept>

namespace abrank {

const char* to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::Quadratic: return "quadratic";
        case ConstructionKind::Cubic: return "cubic";
        case ConstructionKind::Quartic: return "quartic";
    }
    return "?";
}

ConstructionKind parse_construction_kind(const std::string& text) {
    if (text == "quadratic") return ConstructionKind::Quadratic;
    if (text == "cubic") return ConstructionKind::Cubic;
    if (text == "quartic") return ConstructionKind::Quartic;
    throw std::invalid_argument("unknown curve kind '" + text + "'");
}

std::string to_string(const Params& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ", ";
        out += name + "=" + value.get_str();
    }
    return out;
}

std::vector<Rational> rationals_up_to_height(int height) {
    std::vector<Rational> out;
    for (long d = 1; d <= height; ++d) {
        for (long n = 0; n <= height; ++n)
            if (std::gcd(n, d) == 1) out.push_back(make_rational(n, d));
        for (long n = -1; n >= -height; --n)
            if (std::gcd(-n, d) == 1) out.push_back(make_rational(n, d));
    }
    return out;
}

}  // namespace abrank
