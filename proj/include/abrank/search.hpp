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

#ifndef ABRANK_SEARCH_HPP
#define ABRANK_SEARCH_HPP

#include <memory>
#include <span>
#include <vector>

#include "abrank/curve_spec.hpp"
#include "abrank/forged_point.hpp"

namespace abrank {

/// One of the three point constructions behind a common interface.
class Construction {
   public:
    virtual ~Construction() = default;
    virtual ConstructionKind kind() const = 0;
    virtual const EllipticCurve& curve() const = 0;
    virtual const CurveSpec& spec() const = 0;
    /// Specializations in the deterministic search order up to `height`.
    virtual std::vector<Params> candidates(int height) const = 0;
    /// Pure; safe to call concurrently.
    virtual ForgeOutcome forge(const Params& params) const = 0;
    /// Curve description for certificates: the spec plus derived data.
    virtual ordered_json describe() const;
};

/// Validates the description and prepares the matching construction.
std::unique_ptr<Construction> make_construction(const CurveSpec& spec);

/// Serial reference kernel: forge every candidate in order.
std::vector<ForgeOutcome> forge_serial(const Construction& c, std::span<const Params> candidates);
/// OpenMP kernel with the same output as forge_serial for any job count.
std::vector<ForgeOutcome> forge_parallel(const Construction& c, std::span<const Params> candidates, int jobs);

/// Fills in `verdict` for every point in `points`.
void probe_serial(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound);
void probe_parallel(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound, int jobs);

/// jobs <= 1 runs the serial reference kernels.
std::vector<ForgeOutcome> forge_batch(const Construction& c, std::span<const Params> candidates, int jobs);
void probe_batch(const EllipticCurve& curve, std::span<ForgedPoint* const> points, int bound, int jobs);

/// Whether the OpenMP kernels were compiled in.
bool parallel_kernels_available();

}  // namespace abrank

#endif  // ABRANK_SEARCH_HPP
