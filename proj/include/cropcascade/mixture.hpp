#pragma once

// Intercrop mixed-pixel synthesis: sun elevation at overpass, piecewise-linear
// crop heights, row shading, and linear mixing of endmember series.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cropcascade/random.hpp"
#include "cropcascade/sample_set.hpp"
#include "cropcascade/timeseries.hpp"

namespace cropcascade {

struct CalendarDate {
    int year = 2022;
    int month = 1;
    int day = 1;
};

bool is_leap_year(int year);
/// Day of year (1-based); throws InvalidInput for impossible dates.
int day_of_year(const CalendarDate& date);

struct SolarConfig {
    double latitude_deg = 37.0;
    double longitude_deg = 118.0;  // east positive
    double clock_hours = 11.0;     // local clock time of the overpass
    double utc_offset_hours = 8.0;

    void validate() const;
};

struct SolarPosition {
    double declination_deg = 0.0;
    double equation_of_time_min = 0.0;
    double hour_angle_deg = 0.0;
    double elevation_deg = 0.0;
};

/// Fractional-year series approximation of declination and equation of time.
SolarPosition solar_position(int doy, const SolarConfig& cfg, int days_in_year = 365);
double solar_elevation(const CalendarDate& date, const SolarConfig& cfg);
double solar_elevation_doy(int doy, const SolarConfig& cfg, int days_in_year = 365);

/// h(T) = intercept + slope * (T - t_start) on [t_start, t_end).
/// The last segment includes its end day.
struct HeightSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double slope = 0.0;      // m / day
    double intercept = 0.0;  // m at t_start
};

struct HeightModel {
    std::vector<HeightSegment> segments;

    /// Segments must be ordered and contiguous; throws InvalidInput.
    void validate() const;
    double season_start() const { return segments.front().t_start; }
    double season_end() const { return segments.back().t_end; }
};

enum class HeightVariant : std::uint8_t {
    verbatim,    // second segments restart at 0.64 m
    continuous,  // second segments continue from the first segment's end
};

HeightVariant height_variant_from_string(std::string_view name);
HeightModel maize_height_model(HeightVariant variant = HeightVariant::continuous);
HeightModel soybean_height_model(HeightVariant variant = HeightVariant::continuous);

/// Height in meters, clamped at 0. Throws InvalidInput outside the season.
double crop_height(const HeightModel& model, double doy);

struct PlantingPattern {
    int soy_rows = 3;
    int maize_rows = 2;
    double row_width_m = 0.6;

    void validate() const;
    int total_rows() const { return soy_rows + maize_rows; }
};

/// Soybean row i (1-based, i * row_width from the maize row) is shaded when
/// the maize shadow there still stands above the soybean canopy.
bool row_shaded(const PlantingPattern& pattern, int row, double h_maize, double h_soy, double elevation_deg);
int shaded_soy_rows(const PlantingPattern& pattern, double h_maize, double h_soy, double elevation_deg);

/// Area fractions of each endmember plus the shadow term.
struct MixtureFractions {
    std::vector<double> endmember;
    double shadow = 0.0;

    double sum() const;
    /// f >= 0 everywhere and sum 1 within 1e-12; throws InvalidInput.
    void validate() const;

    friend bool operator==(const MixtureFractions&, const MixtureFractions&) = default;
};

/// Fractions {maize, soybean} and shadow for a pattern with `shaded_rows` soybean rows in shade.
MixtureFractions mixture_fractions(const PlantingPattern& pattern, int shaded_rows);

/// One date of the intercrop season.
struct SeasonPoint {
    int doy = 0;
    double elevation_deg = 0.0;
    double h_maize = 0.0;
    double h_soy = 0.0;
    int shaded = 0;
    MixtureFractions fractions;
};

struct ElevationSample {
    int doy = 0;
    double elevation_deg = 0.0;
};

/// Fractions along a list of dates with known sun elevations.
std::vector<SeasonPoint> intercrop_season(const PlantingPattern& pattern, const HeightModel& maize,
                                          const HeightModel& soy, const std::vector<ElevationSample>& dates);

/// Per-step fractions for each sensor grid.
struct MixingSchedule {
    std::vector<MixtureFractions> optical;
    std::vector<MixtureFractions> radar;
};

/// Everything the intercrop synthesis needs; loadable from JSON.
struct MixtureConfig {
    PlantingPattern pattern;
    HeightModel maize = maize_height_model();
    HeightModel soy = soybean_height_model();
    SolarConfig solar;
    std::vector<double> shadow_spectrum = std::vector<double>(kOpticalBands.size(), 0.05);  // per optical band
    double noise_sd = 0.01;

    void validate() const;
};

MixtureConfig load_mixture_config(const std::filesystem::path& path);
MixtureConfig parse_mixture_config(std::string_view text, std::string_view where = "mixture config");
std::string mixture_config_to_json(const MixtureConfig& cfg);

/// Intercrop schedule on the given grids. Before the modeled season there is
/// no shade; after it, heights hold their last value. Radar steps use the
/// shadow-free fractions because backscatter has no optical shadow.
MixingSchedule intercrop_schedule(const MixtureConfig& cfg, const TimeGrid& optical,
                                  const std::optional<TimeGrid>& radar);

/// The same fractions at every step of both grids.
MixingSchedule constant_schedule(const MixtureFractions& fractions, const std::optional<TimeGrid>& optical,
                                 const std::optional<TimeGrid>& radar);

/// S = sum_i f_i x_i + f_shadow * shadow + w per band and valid step, with
/// w ~ N(0, noise_sd). Validity is the intersection of the endmembers'.
PixelSeries synthesize_mixed_series(const std::vector<const PixelSeries*>& endmembers, const MixingSchedule& schedule,
                                    const std::vector<double>& shadow_spectrum, double noise_sd, Rng& rng);

/// Fixed 50/50 maize-citrus blend without shadow.
PixelSeries citrus_maize_mixture(const PixelSeries& maize, const PixelSeries& citrus, double noise_sd, Rng& rng);

/// Draws `count` mixed samples. Endmembers are picked uniformly (with
/// replacement) from the samples of each class in `endmember_classes`.
SampleSet synthesize_mixture_samples(const SampleSet& source, const std::vector<int>& endmember_classes,
                                     const MixingSchedule& schedule, const std::vector<double>& shadow_spectrum,
                                     double noise_sd, std::size_t count, int mixed_class, std::uint64_t seed);

}  // namespace cropcascade
