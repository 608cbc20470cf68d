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

#include "seisqubo/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace seisqubo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

double parse_double(std::string_view text, int line_no) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail("malformed number '" + std::string(text) + "' on CSV line " +
             std::to_string(line_no));
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

}  // namespace

double ray_angle(const Layer& layer, double spacing_m) {
    if (!(layer.thickness_m > 0.0)) {
        fail("layer thickness must be positive, got " + std::to_string(layer.thickness_m));
    }
    if (!(spacing_m >= 0.0)) {
        fail("source spacing must be non-negative, got " + std::to_string(spacing_m));
    }
    return std::atan(spacing_m / layer.thickness_m);
}

void validate(const LayeredModel& model) {
    if (model.layers.empty()) fail("model must have at least one layer");
    if (model.source_spacing_m.size() != model.layers.size()) {
        fail("model has " + std::to_string(model.layers.size()) + " layers but " +
             std::to_string(model.source_spacing_m.size()) + " source spacings");
    }
    for (std::size_t j = 0; j < model.layers.size(); ++j) {
        const Layer& layer = model.layers[j];
        if (!(layer.thickness_m > 0.0) || !std::isfinite(layer.thickness_m)) {
            fail("layer " + std::to_string(j + 1) + " thickness must be positive and finite");
        }
        if (!(layer.velocity_mps > 0.0) || !std::isfinite(layer.velocity_mps)) {
            fail("layer " + std::to_string(j + 1) + " velocity must be positive and finite");
        }
        if (!(model.source_spacing_m[j] >= 0.0) || !std::isfinite(model.source_spacing_m[j])) {
            fail("layer " + std::to_string(j + 1) + " spacing must be non-negative and finite");
        }
    }
}

LayeredModel make_model(std::vector<Layer> layers, std::vector<double> spacing_m) {
    LayeredModel model{std::move(layers), std::move(spacing_m)};
    validate(model);
    return model;
}

LayeredModel make_model(std::vector<Layer> layers) {
    std::vector<double> zeros(layers.size(), 0.0);
    return make_model(std::move(layers), std::move(zeros));
}

double LayeredModel::ray_angle(std::size_t j) const {
    return seisqubo::ray_angle(layers.at(j), source_spacing_m.at(j));
}

double LayeredModel::path_length(std::size_t j) const {
    return layers.at(j).thickness_m / std::cos(ray_angle(j));
}

Eigen::VectorXd LayeredModel::true_slowness() const {
    Eigen::VectorXd s(static_cast<Eigen::Index>(layers.size()));
    for (std::size_t j = 0; j < layers.size(); ++j) {
        s[static_cast<Eigen::Index>(j)] = 1.0 / layers[j].velocity_mps;
    }
    return s;
}

Eigen::VectorXd LayeredModel::mid_depths() const {
    Eigen::VectorXd depths(static_cast<Eigen::Index>(layers.size()));
    double top = 0.0;
    for (std::size_t j = 0; j < layers.size(); ++j) {
        depths[static_cast<Eigen::Index>(j)] = top + 0.5 * layers[j].thickness_m;
        top += layers[j].thickness_m;
    }
    return depths;
}

LayeredModel LayeredModel::with_incident_angle(double theta0_rad) const {
    if (!(theta0_rad >= 0.0) || !(theta0_rad < std::numbers::pi / 2.0)) {
        fail("incident angle must lie in [0, pi/2), got " + std::to_string(theta0_rad));
    }
    std::vector<double> spacing(layers.size());
    for (std::size_t j = 0; j < layers.size(); ++j) {
        spacing[j] = layers[j].thickness_m * std::tan(theta0_rad);
    }
    return make_model(layers, std::move(spacing));
}

LayeredModel LayeredModel::with_spacings(std::vector<double> spacing_m) const {
    return make_model(layers, std::move(spacing_m));
}

TravelTimes travel_times(const LayeredModel& model) {
    validate(model);
    const auto m = static_cast<Eigen::Index>(model.num_layers());
    TravelTimes times(m);
    double one_way = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto j = static_cast<std::size_t>(i);
        one_way += model.path_length(j) / model.layers[j].velocity_mps;
        times[i] = 2.0 * one_way;
    }
    return times;
}

void validate(const SoundSpeedProfile& profile) {
    if (profile.samples.size() < 2) fail("profile needs at least two samples");
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const ProfileSample& s = profile.samples[i];
        if (!std::isfinite(s.depth_m) || !std::isfinite(s.speed_mps)) {
            fail("profile sample " + std::to_string(i + 1) + " is not finite");
        }
        if (!(s.speed_mps > 0.0)) {
            fail("profile speeds must be positive, got " + std::to_string(s.speed_mps));
        }
        if (i > 0 && !(s.depth_m > profile.samples[i - 1].depth_m)) {
            fail("profile depths must be strictly increasing");
        }
    }
}

double SoundSpeedProfile::speed_at(double depth_m) const {
    if (samples.size() < 2) fail("profile needs at least two samples");
    if (depth_m < samples.front().depth_m || depth_m > samples.back().depth_m) {
        fail("depth " + std::to_string(depth_m) + " outside profile range [" +
             std::to_string(samples.front().depth_m) + ", " +
             std::to_string(samples.back().depth_m) + "]");
    }
    auto upper = std::upper_bound(
        samples.begin(), samples.end(), depth_m,
        [](double d, const ProfileSample& s) { return d < s.depth_m; });
    if (upper == samples.end()) return samples.back().speed_mps;
    if (upper == samples.begin()) return samples.front().speed_mps;
    const ProfileSample& hi = *upper;
    const ProfileSample& lo = *(upper - 1);
    const double w = (depth_m - lo.depth_m) / (hi.depth_m - lo.depth_m);
    return lo.speed_mps + w * (hi.speed_mps - lo.speed_mps);
}

double SoundSpeedProfile::mean_speed() const {
    if (samples.empty()) fail("empty profile");
    double sum = 0.0;
    for (const ProfileSample& s : samples) sum += s.speed_mps;
    return sum / static_cast<double>(samples.size());
}

double SoundSpeedProfile::min_depth() const {
    if (samples.empty()) fail("empty profile");
    return samples.front().depth_m;
}

double SoundSpeedProfile::max_depth() const {
    if (samples.empty()) fail("empty profile");
    return samples.back().depth_m;
}

LayeredModel model_from_profile(const SoundSpeedProfile& profile,
                                const std::vector<double>& boundaries_m) {
    validate(profile);
    if (boundaries_m.empty()) fail("need at least one layer boundary");
    std::vector<Layer> layers;
    layers.reserve(boundaries_m.size());
    double top = 0.0;
    for (std::size_t j = 0; j < boundaries_m.size(); ++j) {
        const double bottom = boundaries_m[j];
        if (!(bottom > top)) fail("layer boundaries must be strictly increasing");
        if (bottom < profile.min_depth() || bottom > profile.max_depth()) {
            fail("boundary " + std::to_string(bottom) + " outside profile depth range");
        }
        const double mid = 0.5 * (top + bottom);
        layers.push_back({bottom - top, profile.speed_at(mid)});
        top = bottom;
    }
    return make_model(std::move(layers));
}

std::vector<double> equal_boundaries(const SoundSpeedProfile& profile, int num_layers) {
    validate(profile);
    if (num_layers < 1) fail("layer count must be at least 1");
    const double z0 = profile.min_depth();
    const double z1 = profile.max_depth();
    std::vector<double> boundaries(static_cast<std::size_t>(num_layers));
    for (int j = 1; j <= num_layers; ++j) {
        boundaries[static_cast<std::size_t>(j - 1)] =
            z0 + (z1 - z0) * static_cast<double>(j) / static_cast<double>(num_layers);
    }
    boundaries.back() = z1;
    return boundaries;
}

SoundSpeedProfile synthetic_ocean_profile() {
    SoundSpeedProfile profile;
    const double step = 5.0;
    const double z_max = 5000.0;
    for (double z = 0.0; z <= z_max + 0.5 * step; z += step) {
        const double depth = std::min(z, z_max);
        const double v = 1500.0 - 40.0 * std::exp(-depth / 700.0) + 0.016 * depth;
        profile.samples.push_back({depth, v});
    }
    return profile;
}

SoundSpeedProfile read_profile_csv(std::istream& in) {
    SoundSpeedProfile profile;
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) fail("empty profile CSV");
    ++line_no;
    if (trim(line) != "depth_m,speed_mps") {
        fail("profile CSV must start with header 'depth_m,speed_mps'");
    }
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos) {
            fail("missing comma on CSV line " + std::to_string(line_no));
        }
        ProfileSample sample;
        sample.depth_m = parse_double(trim(row.substr(0, comma)), line_no);
        sample.speed_mps = parse_double(trim(row.substr(comma + 1)), line_no);
        profile.samples.push_back(sample);
    }
    validate(profile);
    return profile;
}

SoundSpeedProfile load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open profile CSV '" + path + "'");
    return read_profile_csv(in);
}

void write_profile_csv(std::ostream& out, const SoundSpeedProfile& profile) {
    out << "depth_m,speed_mps\n";
    char buf[80];
    for (const ProfileSample& s : profile.samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.depth_m, s.speed_mps);
        out << buf;
    }
}

}  // namespace seisqubo
