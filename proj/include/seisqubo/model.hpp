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

#ifndef SEISQUBO_MODEL_HPP
#define SEISQUBO_MODEL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace seisqubo {

/// One horizontal layer of the medium. Units are meters and meters/second.
struct Layer {
    double thickness_m = 0.0;
    double velocity_mps = 0.0;
};

/// Stack of layers, top to bottom, plus the horizontal source spacing per
/// layer. The ray angle in layer j is arctan(spacing_j / thickness_j), so a
/// zero spacing means a vertical ray.
struct LayeredModel {
    std::vector<Layer> layers;
    std::vector<double> source_spacing_m;

    std::size_t num_layers() const { return layers.size(); }

    /// Ray angle theta_j, in [0, pi/2).
    double ray_angle(std::size_t j) const;

    /// One-way slant path through layer j, thickness_j / cos(theta_j).
    double path_length(std::size_t j) const;

    /// Slowness 1/v_j of each layer.
    Eigen::VectorXd true_slowness() const;

    /// Depth of the middle of each layer.
    Eigen::VectorXd mid_depths() const;

    /// Copy with spacing_j = thickness_j * tan(theta0), giving every layer
    /// the same ray angle theta0.
    LayeredModel with_incident_angle(double theta0_rad) const;

    /// Copy with explicit per-layer spacings.
    LayeredModel with_spacings(std::vector<double> spacing_m) const;
};

/// Throws std::invalid_argument when an invariant is violated.
void validate(const LayeredModel& model);

LayeredModel make_model(std::vector<Layer> layers, std::vector<double> spacing_m);

/// Vertical-ray model (all spacings zero).
LayeredModel make_model(std::vector<Layer> layers);

/// Ray angle arctan(spacing / thickness) for a single layer.
double ray_angle(const Layer& layer, double spacing_m);

/// Two-way travel times, seconds. Entry i is the reflection from the bottom
/// of layer i+1 (0-based): t_i = 2 * sum_{j<=i} path_j / v_j.
using TravelTimes = Eigen::VectorXd;

TravelTimes travel_times(const LayeredModel& model);

struct ProfileSample {
    double depth_m = 0.0;
    double speed_mps = 0.0;
};

/// Sound speed versus depth, sampled at strictly increasing depths.
struct SoundSpeedProfile {
    std::vector<ProfileSample> samples;

    /// Piecewise-linear interpolation; throws outside the sampled range.
    double speed_at(double depth_m) const;

    double mean_speed() const;
    double min_depth() const;
    double max_depth() const;
};

void validate(const SoundSpeedProfile& profile);

/// Slices the profile into layers at the given depths. Layer j spans
/// (boundary_{j-1}, boundary_j] with boundary_0 = 0 and takes the speed
/// interpolated at its mid depth. Spacings start at zero.
LayeredModel model_from_profile(const SoundSpeedProfile& profile,
                                const std::vector<double>& boundaries_m);

/// num_layers equally thick layers spanning the profile's depth range.
std::vector<double> equal_boundaries(const SoundSpeedProfile& profile, int num_layers);

/// Smooth ocean-like stand-in profile, v(z) = 1500 - 40 exp(-z/700) + 0.016 z
/// over 0..5000 m, sampled every 5 m.
SoundSpeedProfile synthetic_ocean_profile();

/// CSV with header "depth_m,speed_mps", one sample per row.
SoundSpeedProfile read_profile_csv(std::istream& in);
SoundSpeedProfile load_profile_csv(const std::string& path);
void write_profile_csv(std::ostream& out, const SoundSpeedProfile& profile);

}  // namespace seisqubo

#endif
