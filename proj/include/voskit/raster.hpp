#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace voskit {

// Object ids live in [0, 255] so label maps interchange losslessly with
// 8-bit indexed mask files. 0 is always background.
inline constexpr int kMaxLabel = 255;

/// Per-frame raster of object ids, row-major, top-left origin.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> labels;

    LabelMap() = default;
    LabelMap(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
    const std::uint8_t* row(int y) const {
        return labels.data() + static_cast<std::size_t>(y) * width;
    }
    std::uint8_t* row(int y) {
        return labels.data() + static_cast<std::size_t>(y) * width;
    }
    std::size_t pixel_count() const { return labels.size(); }

    bool operator==(const LabelMap&) const = default;
};

/// Single-object raster of booleans stored as 0/1 bytes, row-major.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false);

    bool get(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    const std::uint8_t* row(int y) const {
        return bits.data() + static_cast<std::size_t>(y) * width;
    }
    std::uint8_t* row(int y) {
        return bits.data() + static_cast<std::size_t>(y) * width;
    }
    std::size_t pixel_count() const { return bits.size(); }

    bool operator==(const BinaryMask&) const = default;
};

/// Number of foreground pixels.
std::size_t foreground_count(const BinaryMask& mask);

/// true when every foreground pixel of `a` is foreground in `b`.
bool is_subset(const BinaryMask& a, const BinaryMask& b);

/// Per-label pixel counts, index = label value.
std::array<std::size_t, 256> label_histogram(const LabelMap& map);

struct ObjectEntry {
    int id = 0;  // strictly positive
    BinaryMask mask;
};

/// Per-object binary masks sharing one frame geometry. Entries produced by
/// split_labels are sorted ascending by id and pairwise disjoint; masks may
/// overlap transiently while gap filling builds augmented sets.
struct ObjectSet {
    int width = 0;
    int height = 0;
    std::vector<ObjectEntry> entries;
};

/// One entry per distinct nonzero label; masks disjoint, union = nonzero region.
ObjectSet split_labels(const LabelMap& map);

/// Each pixel takes the highest id among entries claiming it, 0 if unclaimed.
/// Order-independent. Throws std::invalid_argument on dimension mismatch.
LabelMap merge_labels(const ObjectSet& objs);

/// Nearest-neighbour resize. Source index per axis:
/// src = floor((dst + 0.5) * src_size / dst_size), clamped to bounds.
/// Never fabricates labels. Throws std::invalid_argument on a zero target.
LabelMap resize_labelmap(const LabelMap& map, int new_width, int new_height);

}  // namespace voskit
