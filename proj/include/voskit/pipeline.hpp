#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "voskit/fusion.hpp"
#include "voskit/gap_fill.hpp"
#include "voskit/mask_io.hpp"
#include "voskit/metrics.hpp"

namespace voskit {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitBadData = 3;

struct RunConfig {
    std::vector<std::filesystem::path> input_roots;
    std::filesystem::path output_root;
    std::filesystem::path gt_root;
    std::filesystem::path manifest_path;
    std::filesystem::path report_path;

    int kernel_radius = 2;
    SeShape se_shape = SeShape::square;
    bool fill_background_only = true;
    ScaleSchedule scales{};
    BoundaryParams boundary{};
    bool exclude_first_frame = true;
    bool exclude_last_frame = false;
    Grouping grouping = Grouping::by_sequence;
    std::string transform_desc;  // single-transform mode of cmd_transform
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = all available; never affects outputs
    int max_mask_side = kDefaultMaxMaskSide;
};

// Every command validates paths up front (exit 2), reports malformed data
// with the offending file (exit 3), and is deterministic given config + seed.

/// Gap-fill every mask under input_roots[0] into a mirrored tree at
/// output_root; prints a per-sequence summary.
int cmd_postprocess(const RunConfig& config);

/// Fuse the prediction stacks listed in manifest_path into output_root.
int cmd_fuse(const RunConfig& config);

/// Score input_roots[0] against gt_root; prints the J/F/J&F table and writes
/// the JSON report. Low scores are data, not errors.
int cmd_evaluate(const RunConfig& config);

/// Apply transform_desc to every mask (mirrored tree), or with an empty
/// transform_desc emit one tree per schedule scale plus a manifest.
int cmd_transform(const RunConfig& config);

/// Write the deterministic synthetic fixture tree to output_root.
int cmd_make_fixtures(const RunConfig& config);

/// Dilation throughput report; verifies the fast kernel against the oracle
/// before timing anything.
int cmd_bench(const RunConfig& config);

/// Clamp-to-available worker resolution used by all commands.
int resolve_workers(int requested);

}  // namespace voskit
