#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cropcascade/timeseries.hpp"

namespace cropcascade {

enum class IndexKind : std::uint8_t {
    NDVI,
    EVI,
    LSWI,
    MNDWI,
    NDYI,
    RENDVI,
    NDPI,
    RE2,
    MPDI,
};

inline constexpr std::array<IndexKind, 9> kAllIndices = {
    IndexKind::NDVI,   IndexKind::EVI,  IndexKind::LSWI, IndexKind::MNDWI, IndexKind::NDYI,
    IndexKind::RENDVI, IndexKind::NDPI, IndexKind::RE2,  IndexKind::MPDI,
};

std::string_view to_string(IndexKind kind);
/// Throws InvalidInput for unknown names.
IndexKind index_from_string(std::string_view name);
bool is_index_name(std::string_view name);

/// Tunable parts of the index formulas.
struct IndexParams {
    double ndpi_alpha = 0.74;        // weight of red vs swir1 in the NDPI reference
    BandId rendvi_band = BandId::re1;  // red-edge band used by RENDVI

    friend bool operator==(const IndexParams&, const IndexParams&) = default;
};

Sensor sensor_of(IndexKind kind);
/// Bands an index reads, given the parameterization.
std::vector<BandId> required_bands(IndexKind kind, const IndexParams& params = {});

/// Denominators smaller than this in magnitude make a step invalid.
inline constexpr double kMinDenominator = 1e-9;

/// Evaluates one index from band values indexed by BandId. Returns NaN when the
/// denominator is degenerate.
double index_value(IndexKind kind, std::span<const double, kBandCount> bands,
                   const IndexParams& params = {});

struct IndexSeries {
    TimeGrid grid;
    std::vector<double> values;
    std::vector<std::uint8_t> valid;
};

/// Applies the index formula step by step. Invalid inputs and degenerate
/// denominators give invalid outputs. Throws InvalidInput on a missing band.
IndexSeries compute_index(const PixelSeries& series, IndexKind kind,
                          const IndexParams& params = {});

/// Same formula evaluated at every step regardless of the mask (for gap-filled
/// feature series). Degenerate steps yield 0.
std::vector<double> compute_index_dense(const SensorSeries& series, IndexKind kind,
                                        const IndexParams& params = {});

}  // namespace cropcascade
