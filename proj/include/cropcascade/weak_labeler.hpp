#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cropcascade/rule_lang.hpp"
#include "cropcascade/sample_set.hpp"
#include "cropcascade/scene.hpp"

namespace cropcascade {

enum class StrongMode : std::uint8_t {
    percentile,  // valid count strictly above the region's p-th percentile count
    fraction,    // valid fraction within the window at least `value`
};

std::string_view to_string(StrongMode mode);
StrongMode strong_mode_from_string(std::string_view name);

struct StrongSelection {
    StrongMode mode = StrongMode::percentile;
    double value = 75.0;  // percentile in [0, 100], or fraction in [0, 1]
    Sensor sensor = Sensor::optical;
    std::optional<DoyWindow> window;  // whole grid when absent
};

struct StrongResult {
    std::vector<std::uint8_t> mask;
    double threshold = 0.0;  // percentile count, or fraction
    std::size_t selected = 0;
    /// One line describing the mode and outcome; flags an empty selection.
    std::string report;
    bool empty() const { return selected == 0; }
};

/// Picks low-gap pixels. `region` (optional, width*height) limits both the
/// percentile statistics and the selection.
StrongResult select_strong_pixels(const SceneStack& scene, const StrongSelection& selection,
                                  std::span<const std::uint8_t> region = {});

/// Evaluates every rule at every strong pixel. A pixel keeps a label only when
/// the rules that fire name exactly one class; rule class labels are resolved
/// against `classes`.
std::vector<std::int16_t> label_pixels(const SceneStack& scene, const SceneStack* prior,
                                       const std::vector<rules::RuleProgram>& rules,
                                       std::span<const std::uint8_t> strong_mask,
                                       const std::vector<std::string>& classes, const IndexParams& params = {},
                                       int threads = 0);

enum class StructuringElement : std::uint8_t { square, cross };

StructuringElement structuring_element_from_string(std::string_view name);

/// Erosion then dilation. Pixels outside the raster count as background.
std::vector<std::uint8_t> morphological_open(std::span<const std::uint8_t> mask, int width, int height,
                                             StructuringElement element = StructuringElement::square);

/// Opens each class's mask separately; pixels removed become unlabeled.
std::vector<std::int16_t> open_labels(std::span<const std::int16_t> labels, int width, int height,
                                      StructuringElement element = StructuringElement::square);

/// Uniform draws without replacement inside class ∩ region, class by class.
/// Classes absent from `quotas` get none. Shortfalls become warnings.
SampleSet sample_by_quota(const SceneStack& scene, std::span<const std::int16_t> labels,
                          const std::map<int, std::size_t>& quotas, std::span<const std::uint8_t> region,
                          std::uint64_t seed, const std::vector<std::string>& classes, const FeatureSpec& spec,
                          Provenance provenance = Provenance::rule);

/// How many samples each stratum receives; empty strata pass their share on.
std::map<int, std::size_t> allocate_strata(const std::map<int, std::size_t>& stratum_sizes, std::size_t total,
                                           std::vector<std::string>* warnings = nullptr);

/// Equal-allocation stratified draw labeled `class_id`. `eligible` (optional)
/// restricts which pixels may be drawn.
SampleSet stratified_sample(const SceneStack& scene, std::span<const std::uint8_t> strata,
                            const std::vector<int>& strata_ids, std::size_t total, int class_id, std::uint64_t seed,
                            const std::vector<std::string>& classes, const FeatureSpec& spec,
                            std::span<const std::uint8_t> eligible = {});

/// Appends up to `per_class` samples of each class from `real`, marked injected-real.
SampleSet inject_real_samples(SampleSet set, const std::map<int, std::vector<LabeledSample>>& real,
                              std::size_t per_class = 30);

}  // namespace cropcascade
