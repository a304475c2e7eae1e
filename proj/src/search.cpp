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

#include "abrank/search.hpp"

#include <exception>
#include <stdexcept>

#include "abrank/cubic_construct.hpp"
#include "abrank/quad_construct.hpp"
#include "abrank/quartic_construct.hpp"

namespace abrank {

ordered_json Construction::describe() const {
    ordered_json out = to_json(spec());
    out["minpoly"] = rational_array(curve().field()->minpoly().coeffs());
    return out;
}

namespace {

const Rational& param(const Params& params, const std::string& name) {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw std::invalid_argument("missing specialization parameter '" + name + "'");
}

class QuadAdapter final : public Construction {
   public:
    explicit QuadAdapter(const QuadraticSpec& s) : spec_(s), impl_(s.m, s.a, s.b, s.c, s.d) {}
    ConstructionKind kind() const override { return ConstructionKind::Quadratic; }
    const EllipticCurve& curve() const override { return impl_.curve(); }
    const CurveSpec& spec() const override { return spec_; }
    std::vector<Params> candidates(int height) const override { return QuadConstruction::candidates(height); }
    ForgeOutcome forge(const Params& p) const override { return impl_.forge(param(p, "u"), param(p, "v")); }
    ordered_json describe() const override {
        ordered_json out = Construction::describe();
        out["normalization_gamma"] = rational_array(impl_.gamma0().coords());
        return out;
    }

   private:
    CurveSpec spec_;
    QuadConstruction impl_;
};

class CubicAdapter final : public Construction {
   public:
    explicit CubicAdapter(const CubicSpec& s) : spec_(s), impl_(CubicInput::make(s.a, s.b, s.c)) {}
    ConstructionKind kind() const override { return ConstructionKind::Cubic; }
    const EllipticCurve& curve() const override { return impl_.curve(); }
    const CurveSpec& spec() const override { return spec_; }
    std::vector<Params> candidates(int height) const override { return CubicConstruction::candidates(height); }
    ForgeOutcome forge(const Params& p) const override { return impl_.forge(param(p, "t0")); }

   private:
    CurveSpec spec_;
    CubicConstruction impl_;
};

class QuarticAdapter final : public Construction {
   public:
    explicit QuarticAdapter(const QuarticSpec& s) : spec_(s), impl_(QuarticInput::make(s.p, s.q, s.r, s.s)) {}
    ConstructionKind kind() const override { return ConstructionKind::Quartic; }
    const EllipticCurve& curve() const override { return impl_.curve(); }
    const CurveSpec& spec() const override { return spec_; }
    std::vector<Params> candidates(int height) const override { return impl_.candidates(height); }
    ForgeOutcome forge(const Params& p) const override { return impl_.forge({param(p, "u"), param(p, "v")}); }

   private:
    CurveSpec spec_;
    QuarticConstruction impl_;
};

}  // namespace

std::unique_ptr<Construction> make_construction(const CurveSpec& spec) {
    if (const auto* q = std::get_if<QuadraticSpec>(&spec)) return std::make_unique<QuadAdapter>(*q);
    if (const auto* c = std::get_if<CubicSpec>(&spec)) return std::make_unique<CubicAdapter>(*c);
    return std::make_unique<QuarticAdapter>(std::get<QuarticSpec>(spec));
}

std::vector<ForgeOutcome> forge_serial(const Construction& c, std::span<const Params> candidates) {
    std::vector<ForgeOutcome> out;
    out.reserve(candidates.size());
    for (const auto& p : candidates) out.push_back(c.forge(p));
    return out;
}

std::vector<ForgeOutcome> forge_parallel(const Construction& c, std::span<const Params> candidates, int jobs) {
    const auto n = static_cast<long>(candidates.size());
    std::vector<ForgeOutcome> out(candidates.size(), ForgeOutcome{{}, Skip{}});
    std::vector<std::exception_ptr> errors(candidates.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = c.forge(candidates[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    // Report the first failure in candidate order, as the serial kernel would.
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    (void)jobs;
    return out;
}

void probe_serial(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound) {
    for (ForgedPoint* p : points) p->verdict = torsion_probe(curve, p->point, bound);
}

void probe_parallel(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound, int jobs) {
    const auto n = static_cast<long>(points.size());
    std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long i = 0; i < n; ++i) {
        try {
            ForgedPoint* p = points[static_cast<std::size_t>(i)];
            p->verdict = torsion_probe(curve, p->point, bound);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    (void)jobs;
}

std::vector<ForgeOutcome> forge_batch(const Construction& c, std::span<const Params> candidates, int jobs) {
    return jobs <= 1 ? forge_serial(c, candidates) : forge_parallel(c, candidates, jobs);
}

void probe_batch(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound, int jobs) {
    if (jobs <= 1) probe_serial(curve, points, bound);
    else probe_parallel(curve, points, bound, jobs);
}

bool parallel_kernels_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace abrank
