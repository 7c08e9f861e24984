#pragma once

#include <utility>
#include <vector>

#include "voskit/raster.hpp"

namespace voskit {

enum class SeShape { square, disk };

/// Square of radius r covers |dx| <= r, |dy| <= r; disk covers dx^2+dy^2 <= r^2.
/// Radius 0 is the identity element for both shapes.
struct StructuringElement {
    SeShape shape = SeShape::square;
    int radius = 0;

    /// Footprint offsets, deterministic row-major order.
    std::vector<std::pair<int, int>> offsets() const;
    /// Foreground half-width of the footprint row at vertical offset |dy|.
    int row_halfwidth(int dy) const;
};

// Both operations treat everything outside the frame as background: dilation
// ignores footprint positions past the border, erosion fails containment there.
// Output dimensions always equal input dimensions.

/// Fast dilation: output true iff the footprint at that pixel intersects the
/// input foreground. Row/column span decomposition, OpenMP across rows,
/// bit-identical to brute_force_dilate.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

/// Fast erosion: output true iff the footprint lies entirely in the foreground.
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se);

/// Deliberately naive per-pixel reference. Serial, no performance goals;
/// the correctness anchor for dilate and for every test oracle built on it.
BinaryMask brute_force_dilate(const BinaryMask& mask, const StructuringElement& se);

}  // namespace voskit
