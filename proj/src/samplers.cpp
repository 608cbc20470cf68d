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

#include "seisqubo/samplers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "seisqubo/rng.hpp"

namespace seisqubo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Gauge draws use their own stream range so they never collide with
// per-read streams.
constexpr std::uint64_t kGaugeStreamBase = 1ULL << 40;

// Symmetric pair couplings S with S_ij = S_ji = Q_ij (i < j) and zero
// diagonal; the local field of bit k is then Q_kk + (S q)_k.
Eigen::MatrixXd symmetric_couplings(const QuboProblem& problem) {
    const Eigen::Index n = problem.num_bits();
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            sym(i, j) = problem.coeffs(i, j);
            sym(j, i) = problem.coeffs(i, j);
        }
    }
    return sym;
}

// One Metropolis chain; returns the lowest-energy state seen.
BitVector anneal_read(const Eigen::VectorXd& linear, const Eigen::MatrixXd& sym, int sweeps,
                      double beta_initial, double beta_final, std::mt19937_64& rng) {
    const Eigen::Index n = linear.size();
    BitVector q(static_cast<std::size_t>(n));
    Eigen::VectorXd state(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::uint8_t bit = static_cast<std::uint8_t>(rng() & 1u);
        q[static_cast<std::size_t>(i)] = bit;
        state[i] = bit;
    }

    Eigen::VectorXd field = linear + sym * state;
    double energy = state.dot(linear) + 0.5 * state.dot(field - linear);
    double best_energy = energy;
    BitVector best_q = q;

    const double log_ratio = sweeps > 1 ? std::log(beta_final / beta_initial) : 0.0;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const double beta =
            sweeps > 1
                ? beta_initial * std::exp(log_ratio * (static_cast<double>(sweep) /
                                                       static_cast<double>(sweeps - 1)))
                : beta_final;
        for (Eigen::Index k = 0; k < n; ++k) {
            const double delta = q[static_cast<std::size_t>(k)] ? -1.0 : 1.0;
            const double d_energy = delta * field[k];
            if (d_energy > 0.0 && unit_double(rng) >= std::exp(-beta * d_energy)) {
                continue;
            }
            q[static_cast<std::size_t>(k)] ^= 1u;
            energy += d_energy;
            field += delta * sym.col(k);
            if (energy < best_energy) {
                best_energy = energy;
                best_q = q;
            }
        }
    }
    return best_q;
}

// Runs `reads` independent chains. Chain r is seeded from
// derive_seed(seed, stream_offset + r), so the result does not depend on
// which thread executes it.
std::vector<BitVector> run_reads(const Eigen::VectorXd& linear, const Eigen::MatrixXd& sym,
                                 int reads, int sweeps, double beta_initial, double beta_final,
                                 std::uint64_t seed, std::uint64_t stream_offset,
                                 int max_threads) {
    std::vector<BitVector> results(static_cast<std::size_t>(reads));
    unsigned num_threads = max_threads > 0 ? static_cast<unsigned>(max_threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    num_threads = std::min<unsigned>(num_threads, static_cast<unsigned>(reads));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next.fetch_add(1); r < reads; r = next.fetch_add(1)) {
            std::mt19937_64 rng(derive_seed(seed, stream_offset + static_cast<std::uint64_t>(r)));
            results[static_cast<std::size_t>(r)] =
                anneal_read(linear, sym, sweeps, beta_initial, beta_final, rng);
        }
    };
    if (num_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(num_threads);
        for (unsigned t = 0; t < num_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return results;
}

// Deduplicates assignments, rescoring each against `problem`, and sorts by
// (energy, assignment).
SampleSet merge_assignments(const QuboProblem& problem, const std::vector<BitVector>& assignments,
                            SamplerInfo info) {
    std::map<BitVector, int> counts;
    for (const BitVector& a : assignments) ++counts[a];

    SampleSet out;
    out.info = std::move(info);
    out.records.reserve(counts.size());
    for (const auto& [assignment, multiplicity] : counts) {
        out.records.push_back({assignment, qubo_energy(problem, assignment), multiplicity});
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const SampleRecord& a, const SampleRecord& b) {
                  if (a.energy != b.energy) return a.energy < b.energy;
                  return a.assignment < b.assignment;
              });
    return out;
}

GaugeVector draw_gauge(Eigen::Index num_spins, std::mt19937_64& rng) {
    GaugeVector gauge;
    gauge.signs.resize(static_cast<std::size_t>(num_spins));
    for (auto& g : gauge.signs) g = (rng() & 1u) ? 1 : -1;
    return gauge;
}

BitVector ungauge_bits(const BitVector& q, const GaugeVector& gauge) {
    BitVector out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = gauge.signs[i] == 1 ? q[i] : static_cast<std::uint8_t>(1u - q[i]);
    }
    return out;
}

}  // namespace

const SampleRecord& SampleSet::best() const {
    if (records.empty()) throw std::runtime_error("sample set is empty");
    return records.front();
}

void validate(const AnnealSchedule& schedule) {
    if (schedule.reads < 1) fail("schedule needs at least one read");
    if (schedule.sweeps < 1) fail("schedule needs at least one sweep");
    if (!(schedule.beta_initial > 0.0) || !std::isfinite(schedule.beta_initial)) {
        fail("beta_initial must be positive and finite");
    }
    if (!(schedule.beta_final >= schedule.beta_initial) || !std::isfinite(schedule.beta_final)) {
        fail("beta_final must be >= beta_initial and finite");
    }
}

AnnealSchedule resolve_schedule(const QuboProblem& problem, AnnealSchedule schedule) {
    if (schedule.beta_initial > 0.0 && schedule.beta_final > 0.0) return schedule;

    const Eigen::Index n = problem.num_bits();
    double sum = 0.0;
    std::int64_t count = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double value = problem.coeffs(i, j);
            if (value != 0.0) {
                sum += std::abs(value);
                ++count;
            }
        }
    }
    const double scale = count > 0 ? sum / static_cast<double>(count) : 1.0;
    if (schedule.beta_initial <= 0.0) schedule.beta_initial = 0.1 / scale;
    if (schedule.beta_final <= 0.0) schedule.beta_final = 10.0 / scale;
    return schedule;
}

SampleSet solve_exact(const QuboProblem& problem) {
    const Eigen::Index n = problem.num_bits();
    if (n < 1) fail("empty problem");
    if (n > kExactSamplerMaxBits) {
        fail("exact sampler enumerates 2^n states and refuses n = " + std::to_string(n) +
             " > " + std::to_string(kExactSamplerMaxBits));
    }

    BitVector q(static_cast<std::size_t>(n), 0);
    double best_energy = 0.0;
    std::vector<BitVector> minimizers;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (Eigen::Index i = 0; i < n; ++i) {
            q[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1u);
        }
        const double energy = qubo_energy(problem, q);
        if (minimizers.empty() || energy < best_energy) {
            best_energy = energy;
            minimizers.clear();
            minimizers.push_back(q);
        } else if (energy == best_energy) {
            minimizers.push_back(q);
        }
    }
    std::sort(minimizers.begin(), minimizers.end());

    SampleSet out;
    out.info = {"exact", 0, 0, 0, 0};
    out.records.reserve(minimizers.size());
    for (BitVector& assignment : minimizers) {
        out.records.push_back({std::move(assignment), best_energy, 1});
    }
    return out;
}

SampleSet solve_annealed(const QuboProblem& problem, const AnnealSchedule& schedule,
                         int max_threads) {
    if (problem.num_bits() < 1) fail("empty problem");
    const AnnealSchedule resolved = resolve_schedule(problem, schedule);
    validate(resolved);

    const Eigen::VectorXd linear = problem.coeffs.diagonal();
    const Eigen::MatrixXd sym = symmetric_couplings(problem);
    const std::vector<BitVector> assignments =
        run_reads(linear, sym, resolved.reads, resolved.sweeps, resolved.beta_initial,
                  resolved.beta_final, resolved.seed, 0, max_threads);

    return merge_assignments(problem, assignments,
                             {"annealed", resolved.seed, resolved.reads, resolved.sweeps, 0});
}

SampleSet solve_gauged(const QuboProblem& problem, const AnnealSchedule& schedule,
                       const std::vector<GaugeVector>& gauges, int max_threads) {
    if (problem.num_bits() < 1) fail("empty problem");
    if (gauges.empty()) fail("need at least one gauge");
    const AnnealSchedule resolved = resolve_schedule(problem, schedule);
    validate(resolved);

    const Eigen::Index n = problem.num_bits();
    const int num_gauges = static_cast<int>(gauges.size());
    const int reads_per_gauge = std::max(1, resolved.reads / num_gauges);
    const IsingProblem ising = qubo_to_ising(problem);

    std::vector<BitVector> assignments;
    assignments.reserve(static_cast<std::size_t>(reads_per_gauge) *
                        static_cast<std::size_t>(num_gauges));
    for (int g = 0; g < num_gauges; ++g) {
        const GaugeVector& gauge = gauges[static_cast<std::size_t>(g)];
        validate(gauge, n);
        const QuboProblem transformed = ising_to_qubo(apply_gauge(ising, gauge), problem.layout);
        const Eigen::VectorXd linear = transformed.coeffs.diagonal();
        const Eigen::MatrixXd sym = symmetric_couplings(transformed);
        const std::uint64_t stream_offset =
            static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(reads_per_gauge);
        const std::vector<BitVector> raw =
            run_reads(linear, sym, reads_per_gauge, resolved.sweeps, resolved.beta_initial,
                      resolved.beta_final, resolved.seed, stream_offset, max_threads);
        for (const BitVector& q : raw) assignments.push_back(ungauge_bits(q, gauge));
    }

    return merge_assignments(problem, assignments,
                             {"gauged", resolved.seed, reads_per_gauge * num_gauges,
                              resolved.sweeps, num_gauges});
}

SampleSet solve_gauged(const QuboProblem& problem, const AnnealSchedule& schedule,
                       int num_gauges, int max_threads) {
    if (num_gauges < 1) fail("need at least one gauge");
    std::vector<GaugeVector> gauges;
    gauges.reserve(static_cast<std::size_t>(num_gauges));
    for (int g = 0; g < num_gauges; ++g) {
        std::mt19937_64 rng(
            derive_seed(schedule.seed, kGaugeStreamBase + static_cast<std::uint64_t>(g)));
        gauges.push_back(draw_gauge(problem.num_bits(), rng));
    }
    return solve_gauged(problem, schedule, gauges, max_threads);
}

nlohmann::json sample_set_to_json(const SampleSet& samples) {
    nlohmann::json records = nlohmann::json::array();
    for (const SampleRecord& record : samples.records) {
        nlohmann::json assignment = nlohmann::json::array();
        for (std::uint8_t bit : record.assignment) assignment.push_back(static_cast<int>(bit));
        records.push_back({{"assignment", std::move(assignment)},
                           {"energy", record.energy},
                           {"multiplicity", record.multiplicity}});
    }
    return nlohmann::json{{"metadata",
                           {{"sampler", samples.info.name},
                            {"seed", samples.info.seed},
                            {"reads", samples.info.reads},
                            {"sweeps", samples.info.sweeps},
                            {"num_gauges", samples.info.num_gauges}}},
                          {"records", std::move(records)}};
}

}  // namespace seisqubo
