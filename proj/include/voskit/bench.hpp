#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voskit/morphology.hpp"

namespace voskit {

struct DilateBenchRow {
    SeShape shape = SeShape::square;
    int radius = 0;
    double fast_mpix_per_s = 0.0;       // production dilate
    double reference_mpix_per_s = 0.0;  // serial brute-force oracle
    bool verified = true;               // fast == oracle on the sampled crop
    std::string mismatch;               // first differing pixel when !verified
};

/// Times dilate against brute_force_dilate on a synthetic full-HD mask at the
/// standard radii, verifying bit-equality on a crop of each input first.
std::vector<DilateBenchRow> run_dilate_bench(std::uint64_t seed);

}  // namespace voskit
