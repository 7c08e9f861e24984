#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "voskit/raster.hpp"

namespace voskit {

/// Raised for unreadable, unwritable, or malformed mask files.
class MaskIoError : public std::runtime_error {
public:
    MaskIoError(const std::filesystem::path& path, const std::string& what)
        : std::runtime_error(path.string() + ": " + what), path_(path) {}
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Masks travel as 8-bit indexed PNG: pixel value == object id, 0 == background.
// Readable inputs are 8-bit palette or 8-bit grayscale PNG; anything else is
// rejected. Writes emit palette PNG with the conventional VOS colour table so
// files preview sensibly, and write/read round-trips are lossless.

inline constexpr int kDefaultMaxMaskSide = 16384;

LabelMap read_mask_file(const std::filesystem::path& path,
                        int max_side = kDefaultMaxMaskSide);

void write_mask_file(const LabelMap& map, const std::filesystem::path& path);

}  // namespace voskit
