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

#include "seisqubo/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "seisqubo/qubo.hpp"
#include "seisqubo/rng.hpp"

namespace seisqubo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

SampleSet run_sampler(const QuboProblem& problem, const SolverConfig& config, int iteration) {
    if (config.sampler == SamplerKind::exact) {
        return solve_exact(problem);
    }
    // Each iteration solves a different problem; give it its own stream so
    // chains do not repeat across iterations.
    AnnealSchedule schedule = config.schedule;
    schedule.seed = derive_seed(config.schedule.seed, static_cast<std::uint64_t>(iteration));
    if (config.sampler == SamplerKind::annealed) {
        return solve_annealed(problem, schedule, config.max_threads);
    }
    return solve_gauged(problem, schedule, config.num_gauges, config.max_threads);
}

}  // namespace

SamplerKind sampler_kind_from_string(const std::string& name) {
    if (name == "exact") return SamplerKind::exact;
    if (name == "annealed") return SamplerKind::annealed;
    if (name == "gauged") return SamplerKind::gauged;
    fail("unknown sampler '" + name + "' (expected exact, annealed, or gauged)");
}

std::string to_string(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::exact: return "exact";
        case SamplerKind::annealed: return "annealed";
        case SamplerKind::gauged: return "gauged";
    }
    return "unknown";
}

std::string to_string(Termination reason) {
    return reason == Termination::tolerance ? "tolerance" : "max_iterations";
}

InversionResult invert(const LinearSystem& system, const SolverConfig& config) {
    validate(system);
    validate(config.initial_box);
    if (config.initial_box.center.size() != system.size()) {
        fail("initial box size does not match system size");
    }
    if (config.max_iterations < 1) fail("max_iterations must be at least 1");
    if (!(config.tolerance >= 0.0)) fail("tolerance must be non-negative");
    if (config.bits_per_var < 1) fail("bits_per_var must be at least 1");
    if (config.sampler == SamplerKind::gauged && config.num_gauges < 1) {
        fail("gauged sampler needs at least one gauge");
    }

    const auto m = static_cast<int>(system.size());
    const BitLayout layout{m, config.bits_per_var};
    const Eigen::MatrixXd expanded = expand_matrix(system.matrix, layout);

    InversionResult result;
    result.termination = Termination::max_iterations;
    Eigen::VectorXd center = config.initial_box.center;
    double half_width = config.initial_box.half_width;
    Eigen::VectorXd slowness = center;

    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        const BoxTransform box{center, half_width};
        const Eigen::VectorXd rhs = boxed_rhs(system, box);
        const QuboProblem problem = build_qubo(expanded, rhs, layout);
        const SampleSet samples = run_sampler(problem, config, iteration);
        const Eigen::VectorXd x = decode_bits(samples.best().assignment, layout);
        slowness = recover_slowness(box, x);
        if (!slowness.allFinite()) {
            throw std::runtime_error("solver produced a non-finite slowness at iteration " +
                                     std::to_string(iteration));
        }

        IterationRecord record;
        record.iteration = iteration;
        record.box_half_width = half_width;
        record.slowness = slowness;
        record.residual_l2 = (system.matrix * slowness - system.rhs).norm();
        record.update_norm_sq = (slowness - center).squaredNorm();
        result.trace.push_back(std::move(record));

        if (result.trace.back().update_norm_sq <= config.tolerance) {
            result.termination = Termination::tolerance;
            break;
        }
        center = slowness;
        half_width *= 0.5;
    }

    result.final_slowness = slowness;
    return result;
}

}  // namespace seisqubo
