#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace voskit {

// Mask trees follow the <root>/<sequence>/<frame>.png convention with
// zero-padded frame names, so lexicographic order is temporal order.

/// Sorted names of the immediate subdirectories of root.
std::vector<std::string> list_sequences(const std::filesystem::path& root);

/// Sorted .png filenames directly inside a sequence directory.
std::vector<std::string> list_frames(const std::filesystem::path& sequence_dir);

}  // namespace voskit
