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

#include "seisqubo/linsys.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seisqubo {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

void validate(const LinearSystem& system) {
    const Eigen::Index m = system.matrix.rows();
    if (m == 0 || system.matrix.cols() != m) fail("system matrix must be square and non-empty");
    if (system.rhs.size() != m) fail("system rhs length does not match matrix size");
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(system.matrix(i, i) > 0.0) || !std::isfinite(system.matrix(i, i))) {
            fail("system diagonal must be positive and finite");
        }
        for (Eigen::Index j = i + 1; j < m; ++j) {
            if (system.matrix(i, j) != 0.0) fail("system matrix must be lower triangular");
        }
    }
    if (!system.rhs.allFinite()) fail("system rhs must be finite");
}

void validate(const BoxTransform& box) {
    if (box.center.size() == 0) fail("box center must be non-empty");
    if (!box.center.allFinite()) fail("box center must be finite");
    if (!(box.half_width > 0.0) || !std::isfinite(box.half_width)) {
        fail("box half width must be positive and finite");
    }
}

LinearSystem build_system(const LayeredModel& model) {
    validate(model);
    const auto m = static_cast<Eigen::Index>(model.num_layers());
    LinearSystem system;
    system.matrix = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double column = 2.0 * model.path_length(static_cast<std::size_t>(j));
        for (Eigen::Index i = j; i < m; ++i) {
            system.matrix(i, j) = column;
        }
    }
    system.rhs = travel_times(model);
    return system;
}

Eigen::VectorXd boxed_rhs(const LinearSystem& system, const BoxTransform& box) {
    validate(system);
    validate(box);
    if (box.center.size() != system.size()) {
        fail("box center length does not match system size");
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(system.size());
    return (system.rhs + box.half_width * (system.matrix * ones) -
            system.matrix * box.center) /
           box.half_width;
}

SlownessVector recover_slowness(const BoxTransform& box, const Eigen::VectorXd& x) {
    validate(box);
    if (x.size() != box.center.size()) fail("box point length does not match box center");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0) || !(x[i] < 2.0)) {
            fail("box point component " + std::to_string(i) + " = " + std::to_string(x[i]) +
                 " outside [0, 2)");
        }
    }
    return box.center + box.half_width * (x - Eigen::VectorXd::Ones(x.size()));
}

BoxTransform default_box(const SoundSpeedProfile& profile, Eigen::Index num_layers) {
    validate(profile);
    if (num_layers < 1) fail("box needs at least one layer");
    const double s0 = 1.0 / profile.mean_speed();
    BoxTransform box;
    box.center = Eigen::VectorXd::Constant(num_layers, s0);
    box.half_width = 0.5 * box.center.maxCoeff();
    return box;
}

}  // namespace seisqubo
