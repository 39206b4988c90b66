#pragma once

// Synthetic scenes with known ground truth: double-logistic greenness curves
// drive per-band reflectance and backscatter; cloud gaps follow a target
// valid-count histogram.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cropcascade/scene.hpp"
#include "cropcascade/weakener.hpp"

namespace cropcascade {

/// One growing cycle: logistic green-up followed by logistic senescence down
/// to `residual` of the amplitude.
struct GrowthCycle {
    double amplitude = 1.0;
    double greenup_doy = 150.0;
    double greenup_rate = 0.1;
    double senescence_doy = 250.0;
    double senescence_rate = 0.1;
    double residual = 0.0;

    double at(double doy) const;
};

/// Spectrum per BandId slot (optical reflectance, radar linear power).
using Spectrum = std::array<double, kBandCount>;

/// Surface water (or any other endmember) replacing the land signal in a DOY range.
struct SurfaceEvent {
    double start_doy = 0.0;
    double end_doy = 0.0;
    Spectrum spectrum{};
};

struct PhenologyProfile {
    std::string name;
    std::string class_name;
    int stratum = 1;
    double base = 0.0;  // greenness outside the cycles
    std::vector<GrowthCycle> cycles;
    Spectrum soil{};    // greenness 0
    Spectrum canopy{};  // greenness 1
    std::vector<SurfaceEvent> events;
    std::string prior_profile;  // profile used for the prior year; empty = same

    /// Greenness in [0, 1].
    double greenness(double doy) const;
    /// Noise-free band values at a DOY.
    Spectrum spectrum_at(double doy) const;
};

/// Stratum ids used by the default profiles.
namespace strata {
inline constexpr int cropland = 1;
inline constexpr int forest = 2;
inline constexpr int grassland = 3;
inline constexpr int wetland = 4;
inline constexpr int water = 5;
inline constexpr int impervious = 6;
}  // namespace strata

std::map<int, std::string> default_strata_names();

/// Calibrated profiles for every class the shipped rules address.
std::vector<PhenologyProfile> default_profiles();
const PhenologyProfile& find_profile(const std::vector<PhenologyProfile>& profiles, std::string_view name);

std::string profiles_to_json(const std::vector<PhenologyProfile>& profiles);
std::vector<PhenologyProfile> parse_profiles(std::string_view text, std::string_view where = "profiles");

struct CloudModel {
    bool enabled = false;
    TargetHistogram target;          // over optical valid counts 0..steps
    double correlation_length = 8.0;  // pixels
    bool radar_gaps = false;          // radar stays fully valid unless set
};

/// Discretized bell-shaped valid-fraction distribution used as the default
/// cloud target (most pixels see a bit over half their steps).
TargetHistogram default_cloud_histogram(int steps);

struct GeneratorConfig {
    TimeGrid optical{1, 10, 30, 0};
    std::optional<TimeGrid> radar = TimeGrid{1, 12, 25, 0};
    double noise_sd = 0.01;         // optical, additive
    double radar_noise_rel = 0.05;  // radar, relative
    CloudModel cloud;
    std::uint64_t seed = 1;
    std::vector<std::string> classes;  // empty: classes of the profiles in first-use order
};

/// Class-region map: each pixel names one profile through `palette`.
struct SceneLayout {
    int width = 0;
    int height = 0;
    std::vector<std::string> palette;
    std::vector<std::uint16_t> cells;

    const std::string& profile_at(std::size_t p) const { return palette[cells[p]]; }
};

SceneLayout uniform_layout(int width, int height, const std::string& profile);

/// Voronoi fields of roughly `field_size` pixels across, each assigned a
/// profile drawn by weight.
SceneLayout random_field_layout(int width, int height, const std::map<std::string, double>& weights,
                                double field_size, std::uint64_t seed);

/// Valid masks with the exact target histogram (largest-remainder rounding).
/// Returns [t][pixel] validity.
std::vector<std::uint8_t> cloud_masks(int width, int height, int steps, const CloudModel& model, std::uint64_t seed);

struct GeneratedScene {
    SceneStack scene;
    SceneLayout layout;
};

GeneratedScene generate_scene(const SceneLayout& layout, const std::vector<PhenologyProfile>& profiles,
                              const GeneratorConfig& config);

/// Same layout one year earlier, each pixel following its profile's prior_profile.
SceneStack generate_prior_year(const SceneLayout& layout, const std::vector<PhenologyProfile>& profiles,
                               const GeneratorConfig& config);

/// Generator configuration file (JSON): dimensions, weights, grids, noise, clouds, seed.
struct GeneratorSpec {
    int width = 128;
    int height = 128;
    double field_size = 10.0;
    std::map<std::string, double> weights;
    GeneratorConfig config;
    std::vector<PhenologyProfile> profiles = default_profiles();
    bool prior_year = true;
};

GeneratorSpec parse_generator_spec(std::string_view text, std::string_view where = "generator config");
GeneratorSpec load_generator_spec(const std::filesystem::path& path);
std::string generator_spec_to_json(const GeneratorSpec& spec);

struct GeneratedBundle {
    GeneratedScene current;
    std::optional<SceneStack> prior;  // set when spec.prior_year
};

/// Random field layout from the generator spec's weights, then the scene and its prior year.
GeneratedBundle generate_from_spec(const GeneratorSpec& spec);

/// Zhijiang-like five-class preset: maize, rice, fallow, citrus, other.
GeneratorSpec five_class_preset(std::uint64_t seed = 1);
/// Every default profile in one scene; classes include soybean and vegetable.
GeneratorSpec all_profiles_preset(std::uint64_t seed = 1);

}  // namespace cropcascade
