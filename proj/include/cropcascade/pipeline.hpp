#pragma once

// Configuration-driven cascade: strong-pixel selection, rule labels, opening,
// sampling, weakening, optional mixtures, forest, PUL overlays, evaluation.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cropcascade/forest.hpp"
#include "cropcascade/mixture.hpp"
#include "cropcascade/sample_set.hpp"
#include "cropcascade/scene.hpp"
#include "cropcascade/weak_labeler.hpp"
#include "cropcascade/weakener.hpp"

namespace cropcascade {

/// A failure inside one pipeline stage.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& cause)
        : Error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// ---------------------------------------------------------------------------
// Class rasters: <stem>.i16 (row-major, -1 = unclassified) + <stem>.json.

struct ClassRaster {
    int width = 0;
    int height = 0;
    std::vector<std::string> classes;
    std::vector<std::int16_t> data;

    void validate() const;
};

void write_class_raster(const ClassRaster& raster, const std::filesystem::path& stem);
ClassRaster read_class_raster(const std::filesystem::path& stem);

/// Binary masks as <stem>.u8 + <stem>.json.
void write_mask(std::span<const std::uint8_t> mask, int width, int height, const std::filesystem::path& stem);
std::vector<std::uint8_t> read_mask(const std::filesystem::path& stem, int* width = nullptr, int* height = nullptr);

// ---------------------------------------------------------------------------
// Evaluation

struct EvaluationReport {
    std::vector<std::string> classes;
    /// Rows: truth class. Columns: predicted class, then one "unclassified" column.
    std::vector<std::vector<std::size_t>> confusion;
    std::size_t total = 0;
    std::size_t correct = 0;
    double overall_accuracy = 0.0;
    std::vector<double> precision;  // 0 when nothing was predicted as the class
    std::vector<double> recall;     // 0 when the class has no truth pixels
    std::vector<double> f1;
    std::map<std::string, std::string> metadata;

    std::string to_json() const;
    std::string to_text() const;
    std::string confusion_csv() const;
};

/// Confusion matrix over labeled truth pixels; both rasters index `classes`.
EvaluationReport evaluate(std::span<const std::int16_t> prediction, std::span<const std::int16_t> truth,
                          const std::vector<std::string>& classes);

// ---------------------------------------------------------------------------
// Rendering

using Rgb = std::array<std::uint8_t, 3>;

/// Fixed colors for classes 0..n-1 plus black for unclassified (-1).
std::map<int, Rgb> default_palette(std::size_t n_classes);

/// Binary PPM (P6). Throws InvalidInput on a class without a color.
std::string render_class_map(const ClassRaster& raster, const std::map<int, Rgb>& palette);
void write_class_map_image(const ClassRaster& raster, const std::map<int, Rgb>& palette,
                           const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Configuration

struct RuleBinding {
    std::string source;  // file path, or "builtin:<name>"
    std::string class_name;
    rules::RuleProgram program;
};

/// Stratified draw for a class that has no rule, usually "other".
struct StratifiedClass {
    std::string class_name;
    std::vector<int> strata;
    std::size_t total = 0;
};

/// Real samples taken from the scene's truth labels (or a sample set file).
struct RealSamples {
    std::string class_name;
    std::size_t count = 0;
    std::optional<std::filesystem::path> samples;  // otherwise drawn from scene truth
};

struct MixtureStage {
    enum class Kind : std::uint8_t { intercrop, constant } kind = Kind::constant;
    std::vector<std::string> endmembers;
    std::vector<double> fractions;                  // constant kind
    std::optional<std::filesystem::path> config;    // intercrop kind; defaults when absent
    std::string class_name;
    std::size_t count = 0;
    double noise_sd = 0.01;
};

struct PulStage {
    std::string class_name;
    RealSamples positives;
    int rounds = 11;
    ForestParams forest;
};

struct PipelineConfig {
    std::filesystem::path scene;
    std::optional<std::filesystem::path> prior_scene;
    std::vector<std::string> classes;
    std::vector<RuleBinding> rules;
    std::vector<int> rule_strata;  // empty: every pixel
    StrongSelection strong;
    bool morphology = true;
    StructuringElement element = StructuringElement::square;
    std::map<std::string, std::size_t> quotas;
    std::vector<StratifiedClass> stratified;
    std::vector<RealSamples> injected;
    std::optional<TargetHistogram> weakening_target;  // empty: the scene's own histogram
    bool weaken = true;
    std::size_t balance_per_class = 0;  // 0: no balancing
    std::vector<MixtureStage> mixtures;
    FeatureSpec features;
    ForestParams forest;
    std::vector<int> sweep_grid;  // empty: train forest.n_trees directly
    double train_ratio = 0.7;
    std::vector<PulStage> pul;
    std::vector<std::string> overlay_order;  // PUL classes, applied in order
    std::uint64_t seed = 0;
    std::filesystem::path output;
    int threads = 0;
};

/// Relative paths resolve against `base_dir`. Unknown keys, missing files and
/// classes bound to two rules are ConfigErrors.
PipelineConfig parse_pipeline_config(std::string_view text, const std::filesystem::path& base_dir,
                                     std::string_view where = "pipeline config");
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Seeds used by each stage, derived from the master seed.
std::map<std::string, std::uint64_t> stage_seeds(std::uint64_t master);

struct PipelineResult {
    ClassRaster classification;  // forest output
    ClassRaster final_map;       // after overlays
    std::optional<EvaluationReport> report;
    std::vector<std::string> log;
};

/// Runs every stage, writing intermediates under config.output. Throws
/// StageError naming the failing stage.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Scene-wide valid-count histogram used as the default weakening target.
TargetHistogram scene_target_histogram(const SceneStack& scene, Sensor sensor = Sensor::optical);

}  // namespace cropcascade
