#pragma once

#include <utility>
#include <vector>

#include "voskit/morphology.hpp"
#include "voskit/raster.hpp"

namespace voskit {

struct GapFillConfig {
    StructuringElement se{SeShape::square, 2};
    // When true (default) fills may only claim pixels that are background in
    // the input, so every original label survives verbatim and the
    // higher-id-wins rule arbitrates contested gap pixels only. When false the
    // literal merge-with-priority reading applies and fills may overwrite
    // lower-indexed objects.
    bool fill_background_only = true;
};

/// Unordered id pairs (i < j) whose dilated masks overlap anywhere.
/// Throws std::invalid_argument on mask dimension mismatch.
std::vector<std::pair<int, int>> adjacency_pairs(const ObjectSet& objs,
                                                 const StructuringElement& se);

/// Closes background seams between adjacent objects: each object's mask is
/// augmented with its dilation-overlap against every adjacent object, then the
/// augmented masks merge with higher ids winning contested pixels. Radius 0 is
/// the identity.
LabelMap gap_fill(const LabelMap& map, const GapFillConfig& cfg);

/// Element-wise gap_fill, frames processed independently (OpenMP).
/// Throws std::invalid_argument when frames disagree on dimensions.
std::vector<LabelMap> gap_fill_sequence(const std::vector<LabelMap>& frames,
                                        const GapFillConfig& cfg);

}  // namespace voskit
