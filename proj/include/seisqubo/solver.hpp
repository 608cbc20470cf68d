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

#ifndef SEISQUBO_SOLVER_HPP
#define SEISQUBO_SOLVER_HPP

#include <string>
#include <vector>

#include "seisqubo/linsys.hpp"
#include "seisqubo/samplers.hpp"

namespace seisqubo {

enum class SamplerKind { exact, annealed, gauged };

SamplerKind sampler_kind_from_string(const std::string& name);
std::string to_string(SamplerKind kind);

struct SolverConfig {
    int max_iterations = 20;
    double tolerance = 0.0;  // on ||s - s0||^2; 0 runs all iterations
    int bits_per_var = 3;
    BoxTransform initial_box;
    SamplerKind sampler = SamplerKind::annealed;
    AnnealSchedule schedule;
    int num_gauges = 10;
    int max_threads = 0;
};

enum class Termination { tolerance, max_iterations };

std::string to_string(Termination reason);

struct IterationRecord {
    int iteration = 0;        // 1-based
    double box_half_width = 0.0;
    Eigen::VectorXd slowness;
    double residual_l2 = 0.0;     // ||M s - t||_2
    double update_norm_sq = 0.0;  // ||s - s0||^2
};

struct InversionResult {
    SlownessVector final_slowness;
    std::vector<IterationRecord> trace;
    Termination termination = Termination::max_iterations;
};

/// Recursive box shrinking: each pass re-centers the fixed-point search box
/// on the sampled solution and halves its width, so R-bit samples accumulate
/// into arbitrarily fine slowness estimates. Per iteration: form the boxed
/// rhs, expand to bits, build the least-squares QUBO, sample a minimizer,
/// decode, and map back to slowness. Stops when ||s - s0||^2 <= tolerance or
/// after max_iterations.
InversionResult invert(const LinearSystem& system, const SolverConfig& config);

}  // namespace seisqubo

#endif
