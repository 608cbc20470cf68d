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

#ifndef SEISQUBO_QUBO_HPP
#define SEISQUBO_QUBO_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace seisqubo {

using BitVector = std::vector<std::uint8_t>;
using SpinVector = std::vector<std::int8_t>;

/// Fixed-point layout: variable i (0-based) owns bits flat(i, 0..R-1), where
/// bit r carries weight 2^{-r}. Decoded values lie in [0, 2 - 2^{1-R}].
struct BitLayout {
    int num_vars = 0;
    int bits_per_var = 0;

    int total_bits() const { return num_vars * bits_per_var; }
    int flat(int var, int bit) const { return var * bits_per_var + bit; }
    static double bit_weight(int bit) { return std::ldexp(1.0, -bit); }
};

/// Minimize q^T Q q + offset over q in {0,1}^n. Q is stored with the linear
/// terms on the diagonal and pair terms strictly above it.
struct QuboProblem {
    Eigen::MatrixXd coeffs;
    double offset = 0.0;
    BitLayout layout;

    Eigen::Index num_bits() const { return coeffs.rows(); }
};

/// Energy sum_i H_i s_i + sum_{i<j} J_ij s_i s_j + offset over spins in
/// {-1, +1}. Couplings are stored strictly upper triangular.
struct IsingProblem {
    Eigen::VectorXd fields;
    Eigen::MatrixXd couplings;
    double offset = 0.0;

    Eigen::Index num_spins() const { return fields.size(); }
};

/// Spin-reversal signs, entries in {-1, +1}.
struct GaugeVector {
    std::vector<std::int8_t> signs;
};

void validate(const BitLayout& layout);
void validate(const GaugeVector& gauge, Eigen::Index num_spins);

/// Expands each column of M into bits_per_var weighted copies:
/// A(k, flat(i, r)) = M(k, i) * 2^{-r}, so A q = M x for decoded x.
Eigen::MatrixXd expand_matrix(const Eigen::MatrixXd& M, const BitLayout& layout);

/// Least-squares QUBO for ||A q - b||^2:
/// Q_ii = sum_k A_ki^2 - 2 A_ki b_k, Q_ij = 2 sum_k A_ki A_kj (i < j),
/// offset = sum_k b_k^2. For every q, q^T Q q + offset = ||A q - b||^2.
QuboProblem build_qubo(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                       const BitLayout& layout);

/// Fixed-point decode, x_i = sum_r q_{i,r} 2^{-r}.
Eigen::VectorXd decode_bits(const BitVector& q, const BitLayout& layout);

/// q^T Q q + offset.
double qubo_energy(const QuboProblem& problem, const BitVector& q);

/// sum_i H_i s_i + sum_{i<j} J_ij s_i s_j + offset.
double ising_energy(const IsingProblem& problem, const SpinVector& s);

/// Substitutes q = (s + 1)/2; Ising energies (with offset) equal the QUBO
/// energies (with offset) assignment by assignment.
IsingProblem qubo_to_ising(const QuboProblem& problem);

/// Inverse substitution s = 2q - 1.
QuboProblem ising_to_qubo(const IsingProblem& problem, const BitLayout& layout);

/// H_i -> g_i H_i and J_ij -> g_i g_j J_ij. The transformed problem satisfies
/// E'(g .* s) = E(s), so the energy spectrum is unchanged.
IsingProblem apply_gauge(const IsingProblem& problem, const GaugeVector& gauge);

SpinVector spins_from_bits(const BitVector& q);
BitVector bits_from_spins(const SpinVector& s);

/// Export format {n, entries: [[i, j, value]...], offset} with zero-based
/// i <= j; zero coefficients are omitted.
nlohmann::json qubo_to_json(const QuboProblem& problem);

}  // namespace seisqubo

#endif
