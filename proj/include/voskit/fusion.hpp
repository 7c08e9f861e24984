#pragma once

#include <string>
#include <vector>

#include "voskit/raster.hpp"

namespace voskit {

enum class TtaKind { identity, rotate90, rotate180, rotate270, hflip, rescale };

/// An invertible test-time transform. Rotations are clockwise. rescale
/// resamples by nearest neighbour to round(dim * scale_factor).
struct TtaTransform {
    TtaKind kind = TtaKind::identity;
    double scale_factor = 1.0;  // rescale only

    static TtaTransform identity() { return {}; }
    static TtaTransform rescale(double factor) { return {TtaKind::rescale, factor}; }
};

/// Descriptor grammar: id | rot90 | rot180 | rot270 | hflip | scale:<factor>.
TtaTransform parse_transform(const std::string& descriptor);
std::string to_descriptor(const TtaTransform& t);

LabelMap apply_transform(const LabelMap& map, const TtaTransform& t);

/// Undo a transform given the pre-transform dimensions. Exact for rotations
/// and flips; for rescale the round trip is exact only when the intermediate
/// dimensions were produced by apply_transform on those original dimensions.
/// Throws std::invalid_argument when map dimensions are inconsistent with t.
LabelMap invert_transform(const LabelMap& map, const TtaTransform& t,
                          int original_width, int original_height);

struct StackMember {
    TtaTransform provenance;
    LabelMap map;  // already back-transformed to the canonical resolution
};

/// Predictions of one frame across scales/augmentations. Member 0 is the
/// canonical identity/scale-1 prediction and settles voting ties.
struct PredictionStack {
    std::string frame_id;
    std::vector<StackMember> members;
};

/// Per-pixel plurality vote. Ties go to member 0's label when it is among the
/// tied labels, otherwise to the smallest tied label.
/// Throws std::invalid_argument on an empty stack or dimension mismatch.
LabelMap vote_fuse(const PredictionStack& stack);

/// Element-wise vote_fuse, order preserved.
std::vector<LabelMap> fuse_sequence(const std::vector<PredictionStack>& stacks);

/// Multi-scale schedule; strictly increasing, first entry 1.0. The default is
/// the seven scales from 1 to 1.75 in steps of 0.125.
struct ScaleSchedule {
    std::vector<double> scales{1.0, 1.125, 1.25, 1.375, 1.5, 1.625, 1.75};

    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
};

/// Comma-separated factors, e.g. "1.0,1.25,1.5". Validates.
ScaleSchedule parse_scale_schedule(const std::string& csv);

}  // namespace voskit
