#pragma once

#include <cstdint>

#include "shoulderx/data_model.hpp"
#include "shoulderx/image.hpp"

namespace shoulderx {

// Synthetic fixtures: the real radiographs cannot be redistributed, so the
// CLI walkthrough, the smoke tests and the desk-scale acceptance runs all
// work off seeded generated data instead.

/// Linearly separable feature table: per class, every coordinate is drawn
/// around +-`margin` along a provider-specific sign pattern, with Gaussian
/// noise of `noise_sd`. Labels alternate deterministically. `id_prefix`
/// names the rows (e.g. "tr" -> tr0000, tr0001, ...).
FeatureTable synthetic_features(int dim, int count, std::uint64_t seed,
                                const std::string& id_prefix, double margin = 1.0,
                                double noise_sd = 0.3, int id_offset = 0);

/// Radiograph-like test image: dark noisy background with a bright elliptical
/// blob off-center; 3-channel gray-replicated.
ImageBuffer synthetic_radiograph(int height, int width, std::uint64_t seed);

} // namespace shoulderx
