#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "voskit/raster.hpp"

namespace voskit {

/// Two axis-aligned rectangular blobs (ids 1 and 2) separated by a straight
/// background channel of exactly gap_px pixels. vertical_channel picks whether
/// the channel runs vertically (blobs side by side) or horizontally.
LabelMap make_two_blob_frame(int width, int height, int gap_px,
                             bool vertical_channel);

struct FixtureSequence {
    std::string name;
    std::vector<LabelMap> frames;
};

/// Deterministic synthetic sequences: adjacent blobs with a background gap,
/// two objects crossing with occlusion, and an object that disappears and
/// reappears. Identical seeds produce identical frames.
std::vector<FixtureSequence> make_fixture_sequences(std::uint64_t seed);

/// Writes the sequences as a <root>/<sequence>/<frame>.png mask tree with
/// zero-padded frame names. Creates directories as needed.
void write_fixture_tree(const std::filesystem::path& root, std::uint64_t seed);

}  // namespace voskit
