#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "voskit/pipeline.hpp"

using voskit::RunConfig;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--workers", cfg.workers,
                    "worker threads (default: all available; never changes outputs)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", cfg.seed, "seed for synthetic data");
    cmd->add_option("--max-side", cfg.max_mask_side, "largest accepted mask side")
        ->check(CLI::PositiveNumber);
}

void add_kernel(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--kernel-radius", cfg.kernel_radius,
                    "structuring-element radius in pixels")
        ->check(CLI::NonNegativeNumber);
    const std::map<std::string, voskit::SeShape> shapes{
        {"square", voskit::SeShape::square}, {"disk", voskit::SeShape::disk}};
    cmd->add_option("--se-shape", cfg.se_shape, "structuring-element shape")
        ->transform(CLI::CheckedTransformer(shapes, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string scales_csv;

    CLI::App app{
        "voskit: post-process, fuse, and score multi-object video "
        "segmentation mask trees (<root>/<sequence>/<frame>.png)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command-line flags win");
    app.get_config_formatter_base()->comment('#');

    CLI::App* post = app.add_subcommand(
        "postprocess", "close background gaps between adjacent objects");
    post->add_option("--input", cfg.input_roots, "input mask tree root")
        ->required()
        ->expected(1);
    post->add_option("--output", cfg.output_root, "output tree root")->required();
    post->add_flag("--fill-background-only,!--overwrite-objects",
                   cfg.fill_background_only,
                   "restrict fills to background pixels (default on)");
    add_kernel(post, cfg);
    add_common(post, cfg);

    CLI::App* fuse =
        app.add_subcommand("fuse", "plurality-vote fusion of prediction stacks");
    fuse->add_option("--manifest", cfg.manifest_path,
                     "stack manifest: one '<transform> <path>' per line")
        ->required();
    fuse->add_option("--output", cfg.output_root, "output tree root")->required();
    add_common(fuse, cfg);

    CLI::App* eval = app.add_subcommand("evaluate", "J / F / J&F scoring");
    eval->add_option("--input", cfg.input_roots, "prediction tree root")
        ->required()
        ->expected(1);
    eval->add_option("--gt", cfg.gt_root, "ground-truth tree root")->required();
    eval->add_option("--report", cfg.report_path,
                     "JSON report path (default score_report.json)");
    eval->add_option("--exclude-first-frame", cfg.exclude_first_frame,
                     "skip frame 0, the semi-supervised prompt (default true)");
    eval->add_option("--exclude-last-frame", cfg.exclude_last_frame,
                     "skip the final frame (default false)");
    eval->add_option("--boundary-tolerance", cfg.boundary.tolerance_fraction,
                     "boundary band as a fraction of the image diagonal")
        ->check(CLI::PositiveNumber);
    const std::map<std::string, voskit::Grouping> groupings{
        {"by-sequence", voskit::Grouping::by_sequence},
        {"pooled", voskit::Grouping::pooled}};
    eval->add_option("--grouping", cfg.grouping, "aggregation hierarchy")
        ->transform(CLI::CheckedTransformer(groupings, CLI::ignore_case));
    add_common(eval, cfg);

    CLI::App* trans = app.add_subcommand(
        "transform", "apply a transform to a tree, or emit per-scale trees");
    trans->add_option("--input", cfg.input_roots, "input mask tree root")
        ->required()
        ->expected(1);
    trans->add_option("--output", cfg.output_root, "output root")->required();
    trans->add_option("--transform", cfg.transform_desc,
                      "id|rot90|rot180|rot270|hflip|scale:<f>");
    trans->add_option("--scales", scales_csv,
                      "comma-separated scale schedule (default 1..1.75 step 0.125); "
                      "writes one tree per scale plus manifest.txt");
    add_common(trans, cfg);

    CLI::App* fixtures = app.add_subcommand(
        "make-fixtures", "write deterministic synthetic test sequences");
    fixtures->add_option("--output", cfg.output_root, "output tree root")->required();
    add_common(fixtures, cfg);

    CLI::App* bench = app.add_subcommand(
        "bench", "dilation throughput vs the serial reference");
    add_common(bench, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return voskit::kExitBadArgs;
    }

    try {
        if (!scales_csv.empty()) cfg.scales = voskit::parse_scale_schedule(scales_csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return voskit::kExitBadArgs;
    }

    try {
        if (post->parsed()) return voskit::cmd_postprocess(cfg);
        if (fuse->parsed()) return voskit::cmd_fuse(cfg);
        if (eval->parsed()) return voskit::cmd_evaluate(cfg);
        if (trans->parsed()) return voskit::cmd_transform(cfg);
        if (fixtures->parsed()) return voskit::cmd_make_fixtures(cfg);
        if (bench->parsed()) return voskit::cmd_bench(cfg);
    } catch (const voskit::MaskIoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return voskit::kExitBadData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return voskit::kExitInternal;
    }
    return voskit::kExitBadArgs;
}
