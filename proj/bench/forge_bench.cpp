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

// Serial reference kernels against the OpenMP kernels on fixed candidate sets.

#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include "abrank/certificate.hpp"

using namespace abrank;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

std::vector<ForgedPoint*> forged(std::vector<ForgeOutcome>& outcomes) {
    std::vector<ForgedPoint*> out;
    for (auto& o : outcomes)
        if (o.forged()) out.push_back(&o.point());
    return out;
}

void row(const std::string& name, std::size_t n, double reference, double fast) {
    std::cout << std::left << std::setw(28) << name << std::right << std::setw(6) << n << std::fixed
              << std::setprecision(4) << std::setw(11) << reference << std::setw(11) << fast << std::setprecision(2)
              << std::setw(9) << reference / fast << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge/probe kernel benchmark"};
    int jobs = omp_get_max_threads();
    int reps = 3;
    int bound = 24;
    std::size_t exact_points = 4;
    app.add_option("--jobs", jobs, "threads for the parallel kernels")->check(CLI::PositiveNumber);
    app.add_option("--reps", reps, "repetitions, best time is reported")->check(CLI::PositiveNumber);
    app.add_option("--torsion-bound", bound)->check(CLI::PositiveNumber);
    app.add_option("--exact-points", exact_points, "points timed against the repeated-addition probe");
    CLI11_PARSE(app, argc, argv);

    const std::pair<std::string, CurveSpec> cases[] = {
        {"cubic t^3-2 H=12", CubicSpec{0, 0, 2}},
        {"cubic t^3-t-1 H=12", CubicSpec{0, -1, 1}},
        {"quadratic m=2 H=12", QuadraticSpec{Integer(2), 1, 1, 1, 1}},
        {"quartic Phi_5 H=12", QuarticSpec{1, 1, 1, 1}},
    };

    std::cout << std::unitbuf << "jobs=" << jobs << " reps=" << reps << " (seconds, best of reps)\n";
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(6) << "n" << std::setw(11)
              << "reference" << std::setw(11) << "fast" << std::setw(10) << "speedup\n";
    for (const auto& [name, spec] : cases) {
        const auto c = make_construction(spec);
        const auto params = c->candidates(12);
        std::vector<ForgeOutcome> a, b;
        const double fs = best_of(reps, [&] { a = forge_serial(*c, params); });
        const double fp = best_of(reps, [&] { b = forge_parallel(*c, params, jobs); });
        row("forge " + name, params.size(), fs, fp);

        auto pa = forged(a);
        auto pb = forged(b);
        const double ps = best_of(reps, [&] { probe_serial(c->curve(), pa, bound); });
        const double pp = best_of(reps, [&] { probe_parallel(c->curve(), pb, bound, jobs); });
        row("probe " + name, pa.size(), ps, pp);

        // The exact probe adds points up to `bound` times in K(sqrt(delta)); heights grow fast.
        const std::size_t k = std::min(exact_points, pa.size());
        const double exact = best_of(1, [&] {
            for (std::size_t i = 0; i < k; ++i) (void)torsion_probe_exact(c->curve(), pa[i]->point, bound);
        });
        const double sieve = best_of(reps, [&] {
            for (std::size_t i = 0; i < k; ++i) (void)torsion_probe(c->curve(), pa[i]->point, bound);
        });
        row("probe exact vs sieve", k, exact, sieve);
    }
    return 0;
}
