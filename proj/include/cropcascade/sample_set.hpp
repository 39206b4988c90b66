#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cropcascade/indices.hpp"
#include "cropcascade/scene.hpp"
#include "cropcascade/timeseries.hpp"

namespace cropcascade {

enum class Provenance : std::uint8_t { rule, injected_real, synthesized_mixture };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view name);

/// Which series make up a feature vector. Features are the gap-filled band
/// series followed by the index series, each flattened in grid order.
struct FeatureSpec {
    std::vector<BandId> bands;  // empty: every band the series carries, in stack order
    std::vector<IndexKind> indices = {IndexKind::NDVI, IndexKind::EVI, IndexKind::LSWI, IndexKind::MNDWI,
                                      IndexKind::NDYI};
    IndexParams params;

    friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

/// Resolved feature layout for series with a given shape.
struct FeatureLayout {
    std::vector<BandId> bands;
    std::vector<IndexKind> indices;
    std::optional<TimeGrid> optical;
    std::optional<TimeGrid> radar;

    std::size_t size() const;
    /// Column names such as "nir@105" or "NDVI@105".
    std::vector<std::string> names() const;
    /// Short human-readable shape used in layout-mismatch errors.
    std::string describe() const;

    friend bool operator==(const FeatureLayout&, const FeatureLayout&) = default;
};

FeatureLayout resolve_layout(const FeatureSpec& spec, const PixelSeries& series);

/// Feature vector of one pixel. A sensor with no valid step contributes zeros
/// and sets `degenerate`.
std::vector<float> featurize(const PixelSeries& series, const FeatureLayout& layout, const IndexParams& params,
                             bool* degenerate = nullptr);

struct LabeledSample {
    int x = 0;
    int y = 0;
    int class_id = 0;
    Provenance provenance = Provenance::rule;
    PixelSeries series;
    std::vector<float> features;
    bool degenerate = false;

    int valid_count(Sensor s) const;
};

struct SampleMetadata {
    std::uint64_t seed = 0;
    std::map<std::string, std::size_t> quotas;  // class name -> requested count
    std::vector<std::string> warnings;
    std::map<std::string, std::string> notes;    // free-form provenance (mode, target source, ...)
};

struct SampleSet {
    std::vector<std::string> classes;
    FeatureSpec feature_spec;
    std::vector<LabeledSample> samples;
    SampleMetadata metadata;

    std::size_t count_of(int class_id) const;
    /// Layout shared by every sample; throws InvalidInput on an empty set.
    FeatureLayout layout() const;
    /// Recomputes features from the stored series.
    void refresh_features();
    /// Class-table and layout checks; throws InvalidInput.
    void validate() const;
};

int class_index(const std::vector<std::string>& classes, std::string_view name);

/// Builds a sample from a scene pixel with features computed.
LabeledSample sample_from_scene(const SceneStack& scene, std::size_t pixel, int class_id, Provenance provenance,
                                const FeatureSpec& spec);

/// Appends the samples of `b` to `a`; class tables and feature specs must agree.
SampleSet concat(SampleSet a, const SampleSet& b);

// Export: <stem>.csv (one row per sample), <stem>.series.f64 (raw series,
// NaN where invalid), <stem>.features.f32 and <stem>.json (classes, grids,
// bands, feature spec, metadata).

void write_sample_set(const SampleSet& set, const std::filesystem::path& stem);
SampleSet read_sample_set(const std::filesystem::path& stem);

}  // namespace cropcascade
