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

#ifndef SEISQUBO_LINSYS_HPP
#define SEISQUBO_LINSYS_HPP

#include <Eigen/Dense>

#include "seisqubo/model.hpp"

namespace seisqubo {

/// Slowness values, seconds per meter.
using SlownessVector = Eigen::VectorXd;

/// The lower-triangular system M s = t. Column j of M holds the constant
/// two-way path 2 h_j / cos(theta_j) on and below the diagonal.
struct LinearSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;

    Eigen::Index size() const { return matrix.rows(); }
};

/// Affine search box s = center + half_width * (x - 1) with x in [0, 2)
/// componentwise. With R bits per variable the representable slownesses are
/// [center - half_width, center + half_width * (1 - 2^{1-R})].
struct BoxTransform {
    Eigen::VectorXd center;
    double half_width = 0.0;
};

void validate(const LinearSystem& system);
void validate(const BoxTransform& box);

LinearSystem build_system(const LayeredModel& model);

/// Right-hand side of the re-centered system M x = b,
/// b = (t + L*M*1 - M*s0) / L.
Eigen::VectorXd boxed_rhs(const LinearSystem& system, const BoxTransform& box);

/// Maps a box point x (componentwise in [0, 2)) back to slowness.
SlownessVector recover_slowness(const BoxTransform& box, const Eigen::VectorXd& x);

/// Default box: center = 1/mean(profile speed) in every component,
/// half width = 0.5 * max(center).
BoxTransform default_box(const SoundSpeedProfile& profile, Eigen::Index num_layers);

}  // namespace seisqubo

#endif
