#pragma once

// Random forest (CART, Gini, bagging), the tree-count sweep, positive-unlabeled
// voting ensembles, raster prediction and overlay.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cropcascade/sample_set.hpp"
#include "cropcascade/scene.hpp"

namespace cropcascade {

/// Row-major feature matrix with integer class labels.
struct Dataset {
    std::size_t n_features = 0;
    int n_classes = 0;
    std::vector<float> x;  // rows * n_features
    std::vector<int> y;

    std::size_t rows() const { return y.size(); }
    std::span<const float> row(std::size_t i) const { return {x.data() + i * n_features, n_features}; }
    void add(std::span<const float> features, int label);
};

Dataset make_dataset(const SampleSet& set);

struct ForestParams {
    int n_trees = 100;
    int max_depth = 0;          // 0: unlimited
    int min_samples_split = 2;
    int max_features = 0;       // 0: ceil(sqrt(d))
    std::uint64_t seed = 0;
    int threads = 0;            // 0: hardware concurrency; never affects results

    void validate() const;
};

/// One CART tree in flat arrays. Internal nodes send x[feature] <= threshold
/// left; leaves hold class counts of the bootstrap rows that reached them.
struct DecisionTree {
    std::vector<std::int32_t> feature;  // -1 at leaves
    std::vector<float> threshold;
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;
    std::vector<std::int32_t> leaf;     // leaf slot, -1 at internal nodes
    std::vector<std::uint32_t> counts;  // leaf slot * n_classes + class
    int n_classes = 0;
    std::uint64_t seed = 0;

    std::size_t node_count() const { return feature.size(); }
    std::size_t depth() const;
    /// Class with the most leaf rows; ties go to the smallest class index.
    int predict(std::span<const float> x) const;
};

struct ForestModel {
    int n_classes = 0;
    std::size_t n_features = 0;
    ForestParams params;
    std::vector<std::string> classes;
    FeatureSpec feature_spec;
    std::optional<FeatureLayout> layout;  // set when trained from a sample set
    std::vector<DecisionTree> trees;

    /// Per-class tree votes; they sum to the tree count.
    std::vector<std::uint32_t> votes(std::span<const float> x) const;
    /// Majority vote; ties go to the smallest class index.
    int predict(std::span<const float> x) const;
};

/// Throws InvalidInput with fewer than two classes present.
ForestModel train_forest(const Dataset& data, const ForestParams& params);
ForestModel train_forest(const SampleSet& samples, const ForestParams& params);

std::string forest_to_json(const ForestModel& model);
ForestModel forest_from_json(std::string_view text, std::string_view where = "forest model");
void save_forest(const ForestModel& model, const std::filesystem::path& path);
ForestModel load_forest(const std::filesystem::path& path);

struct SweepReport {
    std::vector<int> grid;
    std::vector<double> accuracy;
    int chosen = 0;
    double chosen_accuracy = 0.0;
    std::size_t train_rows = 0;
    std::size_t validation_rows = 0;

    std::string to_json() const;
};

/// Indices of one stratified split: round(ratio * n_c) rows of each class
/// train, the rest validate. Throws when a class has fewer than two rows.
void stratified_split(const std::vector<int>& labels, double train_ratio, std::uint64_t seed,
                      std::vector<std::size_t>& train, std::vector<std::size_t>& validation);

Dataset subset(const Dataset& data, const std::vector<std::size_t>& rows);

/// Trains a fresh forest per grid value on one stratified split and keeps the
/// most accurate (ties: smallest tree count).
SweepReport sweep_tree_count(const Dataset& data, const std::vector<int>& grid, const ForestParams& base,
                             double train_ratio = 0.7);

struct ClassMap {
    int width = 0;
    int height = 0;
    std::vector<std::int16_t> classes;
    std::vector<std::vector<float>> probability;  // per class, width*height vote shares
};

/// Feature vectors of every scene pixel under `layout`; throws naming the
/// first mismatching dimension.
std::vector<float> scene_features(const SceneStack& scene, const FeatureSpec& spec, const FeatureLayout& expected,
                                  int threads = 0);

ClassMap predict_map(const ForestModel& model, const SceneStack& scene, int threads = 0);

struct PulEnsemble {
    int rounds = 0;
    std::vector<ForestModel> models;
    std::vector<std::uint64_t> round_seeds;
    std::vector<std::vector<std::size_t>> unlabeled_draws;  // scene pixel indices per round
    FeatureSpec feature_spec;
    FeatureLayout layout;
};

/// Each round pairs the positives with as many scene pixels drawn uniformly
/// without replacement, labeled provisionally negative, and trains a binary forest.
PulEnsemble pul_train(const SampleSet& positives, const SceneStack& scene, int rounds, const ForestParams& params,
                      std::uint64_t seed);

struct PulPrediction {
    std::vector<std::uint8_t> mask;
    std::vector<std::uint8_t> votes;  // rounds voting positive
};

/// Positive where more than half the rounds vote positive.
std::vector<std::uint8_t> majority_mask(std::span<const std::uint8_t> votes, int rounds);
PulPrediction pul_predict(const PulEnsemble& ensemble, const SceneStack& scene, int threads = 0);

/// Sets pixels true in `mask` to `class_id`.
std::vector<std::int16_t> overlay(std::span<const std::int16_t> base, std::span<const std::uint8_t> mask,
                                  std::int16_t class_id);

}  // namespace cropcascade
