#include "voskit/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "voskit/bench.hpp"
#include "voskit/dataset.hpp"
#include "voskit/fixtures.hpp"

namespace voskit {

namespace fs = std::filesystem;

namespace {

struct ManifestMember {
    TtaTransform transform;
    fs::path root;
};

// One member per line: "<descriptor> <path>", '#' starts a comment. Paths are
// resolved against the manifest's own directory.
std::vector<ManifestMember> parse_manifest(const fs::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw MaskIoError(manifest_path, "cannot open manifest");

    std::vector<ManifestMember> members;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string descriptor, path_str;
        if (!(ls >> descriptor)) continue;  // blank or comment-only
        if (!(ls >> path_str)) {
            throw MaskIoError(manifest_path, "line " + std::to_string(line_no) +
                                                 ": expected '<transform> <path>'");
        }
        std::string extra;
        if (ls >> extra) {
            throw MaskIoError(manifest_path, "line " + std::to_string(line_no) +
                                                 ": trailing tokens after path");
        }
        ManifestMember m;
        try {
            m.transform = parse_transform(descriptor);
        } catch (const std::invalid_argument& e) {
            throw MaskIoError(manifest_path,
                              "line " + std::to_string(line_no) + ": " + e.what());
        }
        fs::path p(path_str);
        m.root = p.is_absolute() ? p : manifest_path.parent_path() / p;
        members.push_back(std::move(m));
    }
    if (members.empty()) throw MaskIoError(manifest_path, "manifest lists no members");
    return members;
}

bool require_dir(const fs::path& p, const char* what) {
    if (p.empty() || !fs::is_directory(p)) {
        std::cerr << "error: " << what << " '" << p.string()
                  << "' is not a directory\n";
        return false;
    }
    return true;
}

// Runs fn(i) for every index in parallel, collecting the error message per
// index; throwing across an OpenMP region is UB.
template <typename Fn>
std::vector<std::string> parallel_frames(long count, Fn&& fn) {
    std::vector<std::string> errors(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (count > 1)
#endif
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    return errors;
}

void set_parallelism(const RunConfig& config) {
#ifdef _OPENMP
    omp_set_num_threads(resolve_workers(config.workers));
#else
    (void)config;
#endif
}

std::string shape_name(SeShape s) { return s == SeShape::square ? "square" : "disk"; }

}  // namespace

int resolve_workers(int requested) {
#ifdef _OPENMP
    const int avail = omp_get_max_threads();
#else
    const int avail = 1;
#endif
    if (requested < 1) return std::max(1, avail);
    return requested;
}

int cmd_postprocess(const RunConfig& config) {
    if (config.input_roots.empty() || !require_dir(config.input_roots[0], "input root")) {
        return kExitBadArgs;
    }
    if (config.output_root.empty()) {
        std::cerr << "error: --output is required\n";
        return kExitBadArgs;
    }
    if (config.kernel_radius < 0) {
        std::cerr << "error: --kernel-radius must be >= 0\n";
        return kExitBadArgs;
    }

    set_parallelism(config);
    const fs::path in_root = config.input_roots[0];
    const GapFillConfig gap{{config.se_shape, config.kernel_radius},
                            config.fill_background_only};

    bool any_failed = false;
    for (const std::string& seq : list_sequences(in_root)) {
        const std::vector<std::string> frames = list_frames(in_root / seq);
        fs::create_directories(config.output_root / seq);

        std::vector<std::size_t> changed(frames.size(), 0);
        std::vector<std::set<int>> objects(frames.size());
        std::vector<std::set<std::pair<int, int>>> pairs(frames.size());

        const auto errors = parallel_frames(
            static_cast<long>(frames.size()), [&](long i) {
                const LabelMap in =
                    read_mask_file(in_root / seq / frames[i], config.max_mask_side);
                const LabelMap out = gap_fill(in, gap);
                for (std::size_t p = 0; p < in.labels.size(); ++p) {
                    if (in.labels[p] != out.labels[p]) ++changed[i];
                    if (in.labels[p]) objects[i].insert(in.labels[p]);
                }
                for (const auto& pr : adjacency_pairs(split_labels(in), gap.se)) {
                    pairs[i].insert(pr);
                }
                write_mask_file(out, config.output_root / seq / frames[i]);
            });

        bool seq_failed = false;
        for (std::size_t i = 0; i < errors.size(); ++i) {
            if (!errors[i].empty()) {
                std::cerr << "error: " << seq << "/" << frames[i] << ": " << errors[i]
                          << "\n";
                seq_failed = true;
            }
        }
        if (seq_failed) {
            any_failed = true;
            std::cout << seq << ": FAILED\n";
            continue;
        }

        std::size_t total_changed = 0;
        std::set<int> seq_objects;
        std::set<std::pair<int, int>> seq_pairs;
        for (std::size_t i = 0; i < frames.size(); ++i) {
            total_changed += changed[i];
            seq_objects.insert(objects[i].begin(), objects[i].end());
            seq_pairs.insert(pairs[i].begin(), pairs[i].end());
        }
        std::cout << seq << ": " << frames.size() << " frames, " << seq_objects.size()
                  << " objects, " << seq_pairs.size() << " adjacent pairs, "
                  << total_changed << " pixels changed\n";
    }
    return any_failed ? kExitBadData : kExitOk;
}

int cmd_fuse(const RunConfig& config) {
    if (config.manifest_path.empty() || !fs::is_regular_file(config.manifest_path)) {
        std::cerr << "error: manifest '" << config.manifest_path.string()
                  << "' not found\n";
        return kExitBadArgs;
    }
    if (config.output_root.empty()) {
        std::cerr << "error: --output is required\n";
        return kExitBadArgs;
    }

    set_parallelism(config);
    std::vector<ManifestMember> members;
    try {
        members = parse_manifest(config.manifest_path);
    } catch (const MaskIoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadData;
    }
    if (members[0].transform.kind != TtaKind::identity &&
        !(members[0].transform.kind == TtaKind::rescale &&
          members[0].transform.scale_factor == 1.0)) {
        std::cerr << "error: " << config.manifest_path.string()
                  << ": member 0 must be the canonical prediction (id or scale:1)\n";
        return kExitBadData;
    }
    for (const ManifestMember& m : members) {
        if (!fs::is_directory(m.root)) {
            std::cerr << "error: member directory '" << m.root.string()
                      << "' not found\n";
            return kExitBadData;
        }
    }

    // frame sets must agree across members, keyed by filename
    const std::vector<std::string> sequences = list_sequences(members[0].root);
    for (const std::string& seq : sequences) {
        const auto canon_frames = list_frames(members[0].root / seq);
        for (std::size_t m = 1; m < members.size(); ++m) {
            if (!fs::is_directory(members[m].root / seq)) {
                std::cerr << "error: member " << m << " is missing sequence '" << seq
                          << "'\n";
                return kExitBadData;
            }
            const auto frames = list_frames(members[m].root / seq);
            std::vector<std::string> missing;
            std::set_difference(canon_frames.begin(), canon_frames.end(),
                                frames.begin(), frames.end(),
                                std::back_inserter(missing));
            if (!missing.empty()) {
                std::cerr << "error: member " << m << " sequence '" << seq
                          << "' is missing frames:";
                for (const std::string& f : missing) std::cerr << " " << f;
                std::cerr << "\n";
                return kExitBadData;
            }
        }
    }

    for (const std::string& seq : sequences) {
        const std::vector<std::string> frames = list_frames(members[0].root / seq);
        fs::create_directories(config.output_root / seq);

        const auto errors = parallel_frames(
            static_cast<long>(frames.size()), [&](long i) {
                PredictionStack stack;
                stack.frame_id = seq + "/" + frames[i];
                const LabelMap canon = read_mask_file(
                    members[0].root / seq / frames[i], config.max_mask_side);
                stack.members.push_back({members[0].transform, canon});
                for (std::size_t m = 1; m < members.size(); ++m) {
                    const LabelMap raw = read_mask_file(
                        members[m].root / seq / frames[i], config.max_mask_side);
                    LabelMap back = invert_transform(raw, members[m].transform,
                                                     canon.width, canon.height);
                    stack.members.push_back({members[m].transform, std::move(back)});
                }
                write_mask_file(vote_fuse(stack),
                                config.output_root / seq / frames[i]);
            });

        for (std::size_t i = 0; i < errors.size(); ++i) {
            if (!errors[i].empty()) {
                std::cerr << "error: " << seq << "/" << frames[i] << ": " << errors[i]
                          << "\n";
                return kExitBadData;
            }
        }
        std::cout << seq << ": fused " << frames.size() << " frames from "
                  << members.size() << " members\n";
    }
    return kExitOk;
}

int cmd_evaluate(const RunConfig& config) {
    if (config.input_roots.empty() || !require_dir(config.input_roots[0], "prediction root")) {
        return kExitBadArgs;
    }
    if (!require_dir(config.gt_root, "ground-truth root")) return kExitBadArgs;

    set_parallelism(config);
    const fs::path pred_root = config.input_roots[0];
    EvalOptions options;
    options.boundary = config.boundary;
    options.exclude_first_frame = config.exclude_first_frame;
    options.exclude_last_frame = config.exclude_last_frame;

    const std::vector<std::string> sequences = list_sequences(config.gt_root);
    std::vector<SequenceScores> all(sequences.size());
    std::vector<std::string> notes;
    std::vector<std::string> excluded;

    for (std::size_t s = 0; s < sequences.size(); ++s) {
        const std::string& seq = sequences[s];
        const std::vector<std::string> frames = list_frames(config.gt_root / seq);
        if (frames.empty()) continue;

        std::vector<LabelMap> gt(frames.size()), pred(frames.size());
        const bool pred_present = fs::is_directory(pred_root / seq);
        if (!pred_present) {
            notes.push_back("sequence '" + seq +
                            "' missing from predictions; scored as empty");
        } else {
            std::vector<std::string> missing;
            const auto pred_frames = list_frames(pred_root / seq);
            std::set_difference(frames.begin(), frames.end(), pred_frames.begin(),
                                pred_frames.end(), std::back_inserter(missing));
            if (!missing.empty()) {
                std::cerr << "error: prediction sequence '" << seq
                          << "' is missing frames:";
                for (const std::string& f : missing) std::cerr << " " << f;
                std::cerr << "\n";
                return kExitBadData;
            }
        }

        auto errors = parallel_frames(
            static_cast<long>(frames.size()), [&](long i) {
                gt[i] = read_mask_file(config.gt_root / seq / frames[i],
                                       config.max_mask_side);
                pred[i] = pred_present
                              ? read_mask_file(pred_root / seq / frames[i],
                                               config.max_mask_side)
                              : LabelMap(gt[i].width, gt[i].height);
            });
        for (std::size_t i = 0; i < errors.size(); ++i) {
            if (!errors[i].empty()) {
                std::cerr << "error: " << seq << "/" << frames[i] << ": " << errors[i]
                          << "\n";
                return kExitBadData;
            }
        }

        std::set<int> ids;
        for (const LabelMap& g : gt) {
            for (std::uint8_t v : g.labels) {
                if (v) ids.insert(v);
            }
        }
        if (options.exclude_first_frame) excluded.push_back(seq + "/" + frames[0]);
        if (options.exclude_last_frame) excluded.push_back(seq + "/" + frames.back());

        try {
            all[s] = {seq, evaluate_sequence(pred, gt, {ids.begin(), ids.end()},
                                             options)};
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: sequence '" << seq << "': " << e.what() << "\n";
            return kExitBadData;
        }
    }

    ScoreReport report;
    try {
        report = aggregate(all, config.grouping);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadData;
    }
    report.excluded_frames = std::move(excluded);
    report.notes = std::move(notes);

    std::cout << report_table(report);
    const fs::path report_path =
        config.report_path.empty() ? fs::path("score_report.json") : config.report_path;
    std::ofstream out(report_path);
    if (!out) {
        std::cerr << "error: cannot write report to '" << report_path.string()
                  << "'\n";
        return kExitBadArgs;
    }
    out << report_to_json(report);
    std::cout << "report: " << report_path.string() << "\n";
    return kExitOk;
}

int cmd_transform(const RunConfig& config) {
    if (config.input_roots.empty() || !require_dir(config.input_roots[0], "input root")) {
        return kExitBadArgs;
    }
    if (config.output_root.empty()) {
        std::cerr << "error: --output is required\n";
        return kExitBadArgs;
    }
    set_parallelism(config);
    const fs::path in_root = config.input_roots[0];

    struct Job {
        TtaTransform transform;
        fs::path root;
        std::string descriptor;
    };
    std::vector<Job> jobs;
    if (!config.transform_desc.empty()) {
        TtaTransform t;
        try {
            t = parse_transform(config.transform_desc);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadArgs;
        }
        jobs.push_back({t, config.output_root, config.transform_desc});
    } else {
        // one subtree per scale plus a manifest ready for `fuse`
        try {
            config.scales.validate();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadArgs;
        }
        for (double s : config.scales.scales) {
            char dir[32];
            std::snprintf(dir, sizeof dir, "scale_%g", s);
            const std::string descriptor =
                s == 1.0 ? "id" : to_descriptor(TtaTransform::rescale(s));
            jobs.push_back({s == 1.0 ? TtaTransform::identity()
                                     : TtaTransform::rescale(s),
                            config.output_root / dir, descriptor});
        }
    }

    for (const std::string& seq : list_sequences(in_root)) {
        const std::vector<std::string> frames = list_frames(in_root / seq);
        for (const Job& job : jobs) fs::create_directories(job.root / seq);

        const auto errors = parallel_frames(
            static_cast<long>(frames.size()), [&](long i) {
                const LabelMap in =
                    read_mask_file(in_root / seq / frames[i], config.max_mask_side);
                for (const Job& job : jobs) {
                    write_mask_file(apply_transform(in, job.transform),
                                    job.root / seq / frames[i]);
                }
            });
        for (std::size_t i = 0; i < errors.size(); ++i) {
            if (!errors[i].empty()) {
                std::cerr << "error: " << seq << "/" << frames[i] << ": " << errors[i]
                          << "\n";
                return kExitBadData;
            }
        }
    }

    if (config.transform_desc.empty()) {
        const fs::path manifest = config.output_root / "manifest.txt";
        std::ofstream out(manifest);
        if (!out) {
            std::cerr << "error: cannot write '" << manifest.string() << "'\n";
            return kExitBadArgs;
        }
        out << "# prediction-stack manifest: <transform> <path>\n";
        for (const Job& job : jobs) {
            out << job.descriptor << " "
                << fs::relative(job.root, config.output_root).string() << "\n";
        }
        std::cout << "manifest: " << manifest.string() << "\n";
    }
    return kExitOk;
}

int cmd_make_fixtures(const RunConfig& config) {
    if (config.output_root.empty()) {
        std::cerr << "error: --output is required\n";
        return kExitBadArgs;
    }
    try {
        write_fixture_tree(config.output_root, config.seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
    for (const FixtureSequence& seq : make_fixture_sequences(config.seed)) {
        std::cout << seq.name << ": " << seq.frames.size() << " frames\n";
    }
    return kExitOk;
}

int cmd_bench(const RunConfig& config) {
#ifdef _OPENMP
    omp_set_num_threads(resolve_workers(config.workers));
#endif
    const auto rows = run_dilate_bench(config.seed);
    for (const DilateBenchRow& row : rows) {
        if (!row.verified) {
            std::cerr << "error: dilate mismatch vs oracle (" << shape_name(row.shape)
                      << ", radius " << row.radius << ") at " << row.mismatch << "\n";
            return kExitInternal;
        }
    }
    std::printf("%-8s %-7s %14s %16s %9s\n", "shape", "radius", "dilate MPix/s",
                "oracle MPix/s", "speedup");
    double square_r2 = 0.0;
    for (const DilateBenchRow& row : rows) {
        std::printf("%-8s %-7d %14.1f %16.2f %8.1fx\n",
                    shape_name(row.shape).c_str(), row.radius, row.fast_mpix_per_s,
                    row.reference_mpix_per_s,
                    row.fast_mpix_per_s / row.reference_mpix_per_s);
        if (row.shape == SeShape::square && row.radius == 2) {
            square_r2 = row.fast_mpix_per_s;
        }
    }
    std::printf("square radius-2 floor (advisory, 100 MPix/s): %.1f MPix/s %s\n",
                square_r2, square_r2 >= 100.0 ? "[ok]" : "[below]");
    return kExitOk;
}

}  // namespace voskit
