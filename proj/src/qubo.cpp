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

#include "seisqubo/qubo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seisqubo {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

void validate(const BitLayout& layout) {
    if (layout.num_vars < 1) fail("bit layout needs at least one variable");
    if (layout.bits_per_var < 1) fail("bit layout needs at least one bit per variable");
}

void validate(const GaugeVector& gauge, Eigen::Index num_spins) {
    if (static_cast<Eigen::Index>(gauge.signs.size()) != num_spins) {
        fail("gauge length does not match spin count");
    }
    for (std::int8_t g : gauge.signs) {
        if (g != 1 && g != -1) fail("gauge entries must be +1 or -1");
    }
}

Eigen::MatrixXd expand_matrix(const Eigen::MatrixXd& M, const BitLayout& layout) {
    validate(layout);
    if (M.cols() != layout.num_vars) {
        fail("matrix has " + std::to_string(M.cols()) + " columns, layout expects " +
             std::to_string(layout.num_vars));
    }
    Eigen::MatrixXd A(M.rows(), layout.total_bits());
    for (int i = 0; i < layout.num_vars; ++i) {
        for (int r = 0; r < layout.bits_per_var; ++r) {
            A.col(layout.flat(i, r)) = M.col(i) * BitLayout::bit_weight(r);
        }
    }
    return A;
}

QuboProblem build_qubo(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                       const BitLayout& layout) {
    validate(layout);
    if (A.cols() != layout.total_bits()) {
        fail("matrix columns do not match layout bit count");
    }
    if (b.size() != A.rows()) fail("rhs length does not match matrix rows");

    const Eigen::Index n = A.cols();
    const Eigen::MatrixXd gram = A.transpose() * A;
    const Eigen::VectorXd proj = A.transpose() * b;

    QuboProblem problem;
    problem.layout = layout;
    problem.offset = b.squaredNorm();
    problem.coeffs = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        problem.coeffs(i, i) = gram(i, i) - 2.0 * proj[i];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            problem.coeffs(i, j) = 2.0 * gram(i, j);
        }
    }
    return problem;
}

Eigen::VectorXd decode_bits(const BitVector& q, const BitLayout& layout) {
    validate(layout);
    if (static_cast<int>(q.size()) != layout.total_bits()) {
        fail("bit vector length " + std::to_string(q.size()) + " does not match layout (" +
             std::to_string(layout.total_bits()) + " bits)");
    }
    Eigen::VectorXd x(layout.num_vars);
    for (int i = 0; i < layout.num_vars; ++i) {
        double value = 0.0;
        for (int r = 0; r < layout.bits_per_var; ++r) {
            if (q[static_cast<std::size_t>(layout.flat(i, r))]) {
                value += BitLayout::bit_weight(r);
            }
        }
        x[i] = value;
    }
    return x;
}

double qubo_energy(const QuboProblem& problem, const BitVector& q) {
    const Eigen::Index n = problem.num_bits();
    if (static_cast<Eigen::Index>(q.size()) != n) fail("assignment length does not match QUBO");
    double energy = problem.offset;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!q[static_cast<std::size_t>(i)]) continue;
        double row = problem.coeffs(i, i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (q[static_cast<std::size_t>(j)]) row += problem.coeffs(i, j);
        }
        energy += row;
    }
    return energy;
}

double ising_energy(const IsingProblem& problem, const SpinVector& s) {
    const Eigen::Index n = problem.num_spins();
    if (static_cast<Eigen::Index>(s.size()) != n) fail("spin vector length does not match problem");
    double energy = problem.offset;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double si = s[static_cast<std::size_t>(i)];
        double row = problem.fields[i];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            row += problem.couplings(i, j) * s[static_cast<std::size_t>(j)];
        }
        energy += si * row;
    }
    return energy;
}

IsingProblem qubo_to_ising(const QuboProblem& problem) {
    const Eigen::Index n = problem.num_bits();
    IsingProblem ising;
    ising.fields = Eigen::VectorXd::Zero(n);
    ising.couplings = Eigen::MatrixXd::Zero(n, n);
    double offset = problem.offset;
    for (Eigen::Index i = 0; i < n; ++i) {
        double field = 0.5 * problem.coeffs(i, i);
        offset += 0.5 * problem.coeffs(i, i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double quarter = 0.25 * problem.coeffs(i, j);
            ising.couplings(i, j) = quarter;
            field += quarter;
            ising.fields[j] += quarter;
            offset += quarter;
        }
        ising.fields[i] += field;
    }
    ising.offset = offset;
    return ising;
}

QuboProblem ising_to_qubo(const IsingProblem& problem, const BitLayout& layout) {
    validate(layout);
    const Eigen::Index n = problem.num_spins();
    if (layout.total_bits() != n) fail("layout bit count does not match spin count");
    QuboProblem qubo;
    qubo.layout = layout;
    qubo.coeffs = Eigen::MatrixXd::Zero(n, n);
    double offset = problem.offset;
    for (Eigen::Index i = 0; i < n; ++i) {
        double diag = 2.0 * problem.fields[i];
        offset -= problem.fields[i];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double coupling = problem.couplings(i, j);
            qubo.coeffs(i, j) = 4.0 * coupling;
            diag -= 2.0 * coupling;
            qubo.coeffs(j, j) -= 2.0 * coupling;
            offset += coupling;
        }
        qubo.coeffs(i, i) += diag;
    }
    qubo.offset = offset;
    return qubo;
}

IsingProblem apply_gauge(const IsingProblem& problem, const GaugeVector& gauge) {
    const Eigen::Index n = problem.num_spins();
    validate(gauge, n);
    IsingProblem out;
    out.fields = problem.fields;
    out.couplings = problem.couplings;
    out.offset = problem.offset;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double gi = gauge.signs[static_cast<std::size_t>(i)];
        out.fields[i] *= gi;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            out.couplings(i, j) *= gi * gauge.signs[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

SpinVector spins_from_bits(const BitVector& q) {
    SpinVector s(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) s[i] = q[i] ? 1 : -1;
    return s;
}

BitVector bits_from_spins(const SpinVector& s) {
    BitVector q(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) q[i] = s[i] > 0 ? 1 : 0;
    return q;
}

nlohmann::json qubo_to_json(const QuboProblem& problem) {
    const Eigen::Index n = problem.num_bits();
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double value = problem.coeffs(i, j);
            if (value != 0.0) entries.push_back({i, j, value});
        }
    }
    return nlohmann::json{{"n", n}, {"entries", std::move(entries)}, {"offset", problem.offset}};
}

}  // namespace seisqubo
