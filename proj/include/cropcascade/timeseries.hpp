#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cropcascade/error.hpp"

namespace cropcascade {

enum class Sensor : std::uint8_t { optical, radar };

inline constexpr std::array<Sensor, 2> kSensors = {Sensor::optical, Sensor::radar};

/// Sentinel-2 reflectance bands (unitless) and Sentinel-1 backscatter (linear power).
enum class BandId : std::uint8_t {
    blue,
    green,
    red,
    re1,
    re2,
    re3,
    nir,
    re4,
    swir1,
    swir2,
    vv,
    vh,
};

inline constexpr std::size_t kBandCount = 12;

inline constexpr std::array<BandId, 10> kOpticalBands = {
    BandId::blue, BandId::green, BandId::red, BandId::re1,   BandId::re2,
    BandId::re3,  BandId::nir,   BandId::re4, BandId::swir1, BandId::swir2,
};
inline constexpr std::array<BandId, 2> kRadarBands = {BandId::vv, BandId::vh};

Sensor sensor_of(BandId band);
std::string_view to_string(BandId band);
std::string_view to_string(Sensor sensor);
BandId band_from_string(std::string_view name);
Sensor sensor_from_string(std::string_view name);

/// Marker stored in place of an invalid observation.
inline constexpr double kInvalid = std::numeric_limits<double>::quiet_NaN();

/// Days in the year preceding the target year; prior-year DOY d has rule time d - 365.
inline constexpr int kDaysPerYear = 365;

/// Regular day-of-year grid: start_doy + k * step_days for k in [0, count).
struct TimeGrid {
    int start_doy = 1;
    int step_days = 10;
    int count = 0;
    int year_offset = 0;  // 0 = target year, -1 = prior year

    int doy(int k) const { return start_doy + k * step_days; }
    /// DOY shifted into the target year's frame (negative for prior-year grids).
    int rule_time(int k) const { return doy(k) + year_offset * kDaysPerYear; }
    int last_doy() const { return doy(count - 1); }
    void validate() const;

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Inclusive DOY range. Bounds may be negative to address the prior year.
struct DoyWindow {
    int lo = 0;
    int hi = 0;

    bool contains(int t) const { return t >= lo && t <= hi; }
    friend bool operator==(const DoyWindow&, const DoyWindow&) = default;
};

/// One sensor's time series at one pixel.
struct SensorSeries {
    TimeGrid grid;
    std::vector<BandId> bands;
    std::vector<std::vector<double>> values;  // per band, length grid.count
    std::vector<std::uint8_t> valid;           // length grid.count

    bool has_band(BandId band) const;
    std::span<const double> band(BandId band) const;
    std::span<double> band(BandId band);
    int valid_count() const;
    void validate() const;
};

/// Per-pixel multi-sensor time series with a validity mask per sensor.
struct PixelSeries {
    std::optional<SensorSeries> optical;
    std::optional<SensorSeries> radar;

    const std::optional<SensorSeries>& sensor(Sensor s) const {
        return s == Sensor::optical ? optical : radar;
    }
    std::optional<SensorSeries>& sensor(Sensor s) {
        return s == Sensor::optical ? optical : radar;
    }
    /// Throws InvalidInput when the sensor is absent.
    const SensorSeries& require(Sensor s) const;
    SensorSeries& require(Sensor s);
    bool has_band(BandId band) const;
};

/// Linearly interpolates interior gaps in grid time and holds the nearest valid
/// value across leading/trailing gaps. The validity mask is kept as-is.
PixelSeries interpolate_gaps(const PixelSeries& series);
SensorSeries interpolate_gaps(const SensorSeries& series);

/// Fraction of grid steps inside `window` that are valid.
double valid_fraction(const PixelSeries& series, Sensor sensor, DoyWindow window);

/// Number of valid steps inside `window` (no error on empty intersection).
int valid_count_in(const SensorSeries& series, DoyWindow window);

}  // namespace cropcascade
