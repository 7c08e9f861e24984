#pragma once

#include <string>
#include <vector>

#include "voskit/raster.hpp"

namespace voskit {

/// Boundary-matching tolerance: a band proportional to the image diagonal,
/// never narrower than min_tolerance_px.
struct BoundaryParams {
    double tolerance_fraction = 0.008;
    int min_tolerance_px = 1;

    int effective_radius(int width, int height) const;
};

/// |pred ∩ gt| / |pred ∪ gt|; 1.0 when both masks are empty.
/// Throws std::invalid_argument on dimension mismatch.
double jaccard(const BinaryMask& pred, const BinaryMask& gt);

/// Foreground pixels with at least one 4-neighbour that is background or
/// outside the frame.
BinaryMask extract_boundary(const BinaryMask& mask);

/// F = 2PR/(P+R) with precision/recall measured between boundaries dilated by
/// a disk of the tolerance radius. Both boundaries empty -> 1.0, exactly one
/// empty -> 0.0, P = R = 0 -> 0.0.
double boundary_f(const BinaryMask& pred, const BinaryMask& gt,
                  const BoundaryParams& params = {});

struct FrameScore {
    int object_id = 0;
    int frame_index = 0;
    double j = 0.0;
    double f = 0.0;
};

struct EvalOptions {
    BoundaryParams boundary{};
    // Frame 0 carries the given annotation in semi-supervised VOS, so it is
    // excluded from scoring by default. Last-frame exclusion is off by default.
    bool exclude_first_frame = true;
    bool exclude_last_frame = false;
};

/// J and F for every object id on every non-excluded frame. An object absent
/// from both pred and gt on a frame scores 1.0/1.0. Throws on frame count or
/// dimension mismatch and when an object id never appears in the ground truth.
std::vector<FrameScore> evaluate_sequence(const std::vector<LabelMap>& pred_frames,
                                          const std::vector<LabelMap>& gt_frames,
                                          const std::vector<int>& object_ids,
                                          const EvalOptions& options = {});

enum class Grouping {
    by_sequence,  // frames -> objects -> sequences -> global
    pooled,       // every frame score weighs equally in the global mean
};

struct SequenceScores {
    std::string sequence;
    std::vector<FrameScore> scores;
};

struct ObjectAggregate {
    std::string sequence;
    int object_id = 0;
    double mean_j = 0.0, mean_f = 0.0, jf = 0.0;
    std::size_t frames = 0;
};

struct SequenceAggregate {
    std::string sequence;
    double mean_j = 0.0, mean_f = 0.0, jf = 0.0;
    std::size_t objects = 0;
};

struct ScoreReport {
    std::vector<ObjectAggregate> per_object;
    std::vector<SequenceAggregate> per_sequence;
    double mean_j = 0.0, mean_f = 0.0, jf = 0.0;  // global
    std::size_t frames_evaluated = 0;
    std::size_t objects_evaluated = 0;
    std::size_t sequences_evaluated = 0;
    std::vector<std::string> excluded_frames;  // "<sequence>/<frame index>"
    std::vector<std::string> notes;            // e.g. sequences missing from pred
};

/// Hierarchical (or pooled) means with jf = (mean_j + mean_f) / 2 at every
/// level. Throws std::invalid_argument when no scores are present.
ScoreReport aggregate(const std::vector<SequenceScores>& sequences,
                      Grouping grouping = Grouping::by_sequence);

/// Round to 4 decimals, ties to even; the reporting precision everywhere.
double round_report(double v);

/// JSON document per the schema in the README.
std::string report_to_json(const ScoreReport& report);

/// Aligned J / F / J&F table, one row per sequence plus the global row.
std::string report_table(const ScoreReport& report);

}  // namespace voskit
