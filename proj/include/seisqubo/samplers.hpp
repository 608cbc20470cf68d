// Copyright 2026 The seisqubo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEISQUBO_SAMPLERS_HPP
#define SEISQUBO_SAMPLERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "seisqubo/qubo.hpp"

namespace seisqubo {

/// Enumeration guard for the exact sampler.
inline constexpr int kExactSamplerMaxBits = 24;

struct SampleRecord {
    BitVector assignment;
    double energy = 0.0;  // q^T Q q + offset, recomputed from the assignment
    int multiplicity = 1;
};

struct SamplerInfo {
    std::string name;
    std::uint64_t seed = 0;
    int reads = 0;
    int sweeps = 0;
    int num_gauges = 0;
};

/// Samples sorted by energy ascending, ties broken by lexicographically
/// smaller assignment. Duplicate assignments are merged into multiplicity.
struct SampleSet {
    std::vector<SampleRecord> records;
    SamplerInfo info;

    const SampleRecord& best() const;
};

/// Independent single-bit-flip Metropolis chains with a geometric inverse
/// temperature ramp. Non-positive beta values are derived from the problem
/// scale when the schedule is resolved.
struct AnnealSchedule {
    int reads = 100;
    int sweeps = 1000;
    double beta_initial = 0.0;
    double beta_final = 0.0;
    std::uint64_t seed = 0;
};

void validate(const AnnealSchedule& schedule);

/// Fills non-positive betas with 0.1/<|Q|> and 10/<|Q|>, where <|Q|> is the
/// mean absolute nonzero coefficient of the problem.
AnnealSchedule resolve_schedule(const QuboProblem& problem, AnnealSchedule schedule);

/// Enumerates all 2^n assignments and returns every global minimizer.
/// Refuses problems with more than kExactSamplerMaxBits bits.
SampleSet solve_exact(const QuboProblem& problem);

/// `reads` Metropolis chains, each seeded from (schedule.seed, read index),
/// so results are identical no matter how reads are scheduled across
/// threads. max_threads <= 0 uses the hardware concurrency.
SampleSet solve_annealed(const QuboProblem& problem, const AnnealSchedule& schedule,
                         int max_threads = 0);

/// Spin-reversal averaging: converts to Ising form, solves one transformed
/// problem per gauge with reads/num_gauges reads each, undoes the gauges and
/// merges. Energies are reported in the original QUBO frame.
SampleSet solve_gauged(const QuboProblem& problem, const AnnealSchedule& schedule,
                       int num_gauges, int max_threads = 0);

/// Same, with caller-supplied gauges.
SampleSet solve_gauged(const QuboProblem& problem, const AnnealSchedule& schedule,
                       const std::vector<GaugeVector>& gauges, int max_threads = 0);

nlohmann::json sample_set_to_json(const SampleSet& samples);

}  // namespace seisqubo

#endif
