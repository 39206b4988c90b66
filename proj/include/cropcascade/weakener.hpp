#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cropcascade/sample_set.hpp"

namespace cropcascade {

/// Proportion of pixels per valid-observation count k = 0..steps.
struct TargetHistogram {
    std::vector<double> proportions;

    static TargetHistogram from_counts(const std::vector<std::size_t>& counts);
    /// Nonnegative bins summing to 1 within 1e-9; throws InvalidInput.
    void validate() const;
    std::size_t max_count() const { return proportions.empty() ? 0 : proportions.size() - 1; }
};

/// Removes valid observations so each sample's count follows the target: each
/// sample draws k; if it holds n > k valid steps, n - k of them are cleared.
SampleSet weaken_samples(const SampleSet& set, const TargetHistogram& target, std::uint64_t seed,
                         Sensor sensor = Sensor::optical);

/// Clears round(fraction * n) valid observations of every sample.
SampleSet weaken_fixed_fraction(const SampleSet& set, double fraction, std::uint64_t seed,
                                Sensor sensor = Sensor::optical);

/// Resizes each listed class to its target count: replicates (cycling in a
/// seeded shuffled order) when short, subsamples without replacement when long.
SampleSet balance_classes(const SampleSet& set, const std::map<int, std::size_t>& targets, std::uint64_t seed);

/// Histogram of valid counts in a sample set.
std::vector<std::size_t> sample_valid_histogram(const SampleSet& set, Sensor sensor = Sensor::optical);

/// L1 distance between an achieved count histogram and the target over bins
/// k < limit, after renormalizing both to those bins.
double histogram_l1(const std::vector<std::size_t>& achieved, const TargetHistogram& target, std::size_t limit);

}  // namespace cropcascade
