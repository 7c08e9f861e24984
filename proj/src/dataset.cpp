#include "voskit/dataset.hpp"

#include <algorithm>

namespace voskit {

namespace fs = std::filesystem;

std::vector<std::string> list_sequences(const fs::path& root) {
    std::vector<std::string> names;
    for (const fs::directory_entry& e : fs::directory_iterator(root)) {
        if (e.is_directory()) names.push_back(e.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<std::string> list_frames(const fs::path& sequence_dir) {
    std::vector<std::string> names;
    for (const fs::directory_entry& e : fs::directory_iterator(sequence_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".png") {
            names.push_back(e.path().filename().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace voskit
