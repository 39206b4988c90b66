#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cropcascade/timeseries.hpp"

namespace cropcascade {

inline constexpr std::int16_t kUnlabeled = -1;

/// Band-sequential stack for one sensor. Values are stored [t][y][x].
struct SensorStack {
    TimeGrid grid;
    std::vector<BandId> bands;
    std::vector<std::vector<float>> values;  // per band, grid.count * pixels
    std::vector<std::uint8_t> valid;          // grid.count * pixels

    bool has_band(BandId band) const;
    std::size_t band_slot(BandId band) const;
};

/// A raster of pixel time series plus optional label and strata rasters.
struct SceneStack {
    int width = 0;
    int height = 0;
    std::optional<SensorStack> optical;
    std::optional<SensorStack> radar;
    std::vector<std::string> classes;         // class table; label k names classes[k]
    std::vector<std::int16_t> labels;         // empty or width*height
    std::vector<std::uint8_t> strata;         // empty or width*height; 0 = none
    std::map<int, std::string> strata_names;  // stratum id -> name

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }

    const std::optional<SensorStack>& sensor(Sensor s) const {
        return s == Sensor::optical ? optical : radar;
    }
    std::optional<SensorStack>& sensor(Sensor s) {
        return s == Sensor::optical ? optical : radar;
    }
    const SensorStack& require(Sensor s) const;

    /// Time series of pixel `p` (row-major index).
    PixelSeries pixel(std::size_t p) const;
    int valid_count(Sensor s, std::size_t p, std::optional<DoyWindow> window = {}) const;

    bool has_labels() const { return !labels.empty(); }
    /// Shape and label-range checks; throws InvalidInput.
    void validate() const;
};

/// One dated acquisition used as compositing input.
struct Observation {
    int doy = 0;
    std::map<BandId, std::vector<float>> image;  // each width*height
    std::vector<std::uint8_t> valid;             // width*height
};

enum class Reducer : std::uint8_t { median, mean };

struct CompositeOptions {
    Sensor sensor = Sensor::optical;
    int start_doy = 1;
    int step_days = 10;
    int count = 0;
    Reducer reducer = Reducer::median;
};

/// Reduces dated observations into fixed-interval bins. A bin with no valid
/// input stays invalid.
SceneStack composite(const std::vector<Observation>& observations, int width, int height,
                     const CompositeOptions& options);

/// hist[k] = number of pixels with exactly k valid steps inside `window`.
std::vector<std::size_t> valid_count_histogram(const SceneStack& scene, Sensor sensor,
                                               std::optional<DoyWindow> window = {});

/// Normalizes a count histogram into proportions.
std::vector<double> normalize_histogram(const std::vector<std::size_t>& counts);

// Scene bundle: a directory holding scene.json plus raw little-endian rasters.

void write_scene(const SceneStack& scene, const std::filesystem::path& dir);
SceneStack read_scene(const std::filesystem::path& dir);

}  // namespace cropcascade
