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

#include "abrank/kpoly.hpp"

#include <stdexcept>

namespace abrank {

KPoly::KPoly(FieldPtr field) : field_(std::move(field)), parts_(static_cast<std::size_t>(field_->degree())) {}

KPoly::KPoly(FieldPtr field, std::vector<UniPoly> parts) : field_(std::move(field)), parts_(std::move(parts)) {
    if (parts_.size() != static_cast<std::size_t>(field_->degree()))
        throw std::invalid_argument("KPoly needs one part per basis element");
}

KPoly KPoly::lambda_power(FieldPtr field, unsigned k, const UniPoly& p) {
    const auto coords = field->reduce(UniPoly::monomial(1, k));
    KPoly out(field);
    for (std::size_t i = 0; i < coords.size(); ++i) out.parts_[i] = coords[i] * p;
    return out;
}

bool KPoly::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

void require_same(const KPoly& x, const KPoly& y) {
    if (!same_field(*x.field(), *y.field())) throw std::invalid_argument("KPoly field mismatch");
}

}  // namespace

KPoly operator+(const KPoly& x, const KPoly& y) {
    require_same(x, y);
    KPoly r = x;
    for (std::size_t i = 0; i < r.parts_.size(); ++i) r.parts_[i] += y.parts_[i];
    return r;
}

KPoly operator-(const KPoly& x, const KPoly& y) {
    require_same(x, y);
    KPoly r = x;
    for (std::size_t i = 0; i < r.parts_.size(); ++i) r.parts_[i] -= y.parts_[i];
    return r;
}

KPoly operator*(const KPoly& x, const KPoly& y) {
    require_same(x, y);
    const std::size_t d = x.parts_.size();
    std::vector<UniPoly> wide(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) wide[i + j] += x.parts_[i] * y.parts_[j];
    KPoly r(x.field_);
    for (std::size_t k = 0; k < wide.size(); ++k) {
        if (wide[k].is_zero()) continue;
        if (k < d) {
            r.parts_[k] += wide[k];
            continue;
        }
        const auto coords = x.field_->reduce(UniPoly::monomial(1, k));
        for (std::size_t i = 0; i < d; ++i)
            if (coords[i] != 0) r.parts_[i] += coords[i] * wide[k];
    }
    return r;
}

KPoly operator*(const UniPoly& s, const KPoly& x) {
    KPoly r = x;
    for (auto& p : r.parts_) p = s * p;
    return r;
}

bool operator==(const KPoly& x, const KPoly& y) {
    require_same(x, y);
    return x.parts_ == y.parts_;
}

NFElement KPoly::operator()(const Rational& t0) const {
    std::vector<Rational> c;
    c.reserve(parts_.size());
    for (const auto& p : parts_) c.push_back(p(t0));
    return NFElement(field_, std::move(c));
}

}  // namespace abrank
