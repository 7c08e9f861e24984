#include "voskit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "voskit/morphology.hpp"

namespace voskit {

namespace {

void check_same_dims(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("mask dimensions differ");
    }
}

BinaryMask label_mask(const LabelMap& map, int id) {
    BinaryMask m(map.width, map.height);
    for (std::size_t i = 0; i < map.labels.size(); ++i) {
        m.bits[i] = map.labels[i] == id ? 1 : 0;
    }
    return m;
}

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

}  // namespace

int BoundaryParams::effective_radius(int width, int height) const {
    const double diag = std::sqrt(static_cast<double>(width) * width +
                                  static_cast<double>(height) * height);
    return std::max(min_tolerance_px,
                    static_cast<int>(std::lround(tolerance_fraction * diag)));
}

double jaccard(const BinaryMask& pred, const BinaryMask& gt) {
    check_same_dims(pred, gt);
    std::size_t inter = 0, uni = 0;
    for (std::size_t i = 0; i < pred.bits.size(); ++i) {
        inter += pred.bits[i] & gt.bits[i];
        uni += pred.bits[i] | gt.bits[i];
    }
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

BinaryMask extract_boundary(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    BinaryMask out(mask);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = mask.row(y);
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < w; ++x) {
            if (!row[x]) continue;
            const bool interior = x > 0 && row[x - 1] && x + 1 < w && row[x + 1] &&
                                  y > 0 && mask.get(x, y - 1) &&
                                  y + 1 < h && mask.get(x, y + 1);
            dst[x] = interior ? 0 : 1;
        }
    }
    return out;
}

double boundary_f(const BinaryMask& pred, const BinaryMask& gt,
                  const BoundaryParams& params) {
    check_same_dims(pred, gt);
    const BinaryMask bp = extract_boundary(pred);
    const BinaryMask bg = extract_boundary(gt);
    const std::size_t np = foreground_count(bp);
    const std::size_t ng = foreground_count(bg);
    if (np == 0 && ng == 0) return 1.0;
    if (np == 0 || ng == 0) return 0.0;

    const StructuringElement band{SeShape::disk,
                                  params.effective_radius(pred.width, pred.height)};
    const BinaryMask bg_band = dilate(bg, band);
    const BinaryMask bp_band = dilate(bp, band);

    std::size_t p_hit = 0, r_hit = 0;
    for (std::size_t i = 0; i < bp.bits.size(); ++i) {
        p_hit += bp.bits[i] & bg_band.bits[i];
        r_hit += bg.bits[i] & bp_band.bits[i];
    }
    const double precision = static_cast<double>(p_hit) / static_cast<double>(np);
    const double recall = static_cast<double>(r_hit) / static_cast<double>(ng);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

std::vector<FrameScore> evaluate_sequence(const std::vector<LabelMap>& pred_frames,
                                          const std::vector<LabelMap>& gt_frames,
                                          const std::vector<int>& object_ids,
                                          const EvalOptions& options) {
    if (pred_frames.size() != gt_frames.size()) {
        throw std::invalid_argument("pred/gt frame counts differ");
    }
    for (std::size_t i = 0; i < gt_frames.size(); ++i) {
        if (pred_frames[i].width != gt_frames[i].width ||
            pred_frames[i].height != gt_frames[i].height) {
            throw std::invalid_argument("pred/gt frame dimensions differ");
        }
    }
    for (int id : object_ids) {
        bool seen = false;
        for (const LabelMap& g : gt_frames) {
            for (std::uint8_t v : g.labels) {
                if (v == id) {
                    seen = true;
                    break;
                }
            }
            if (seen) break;
        }
        if (!seen) {
            throw std::invalid_argument("object id " + std::to_string(id) +
                                        " missing from ground truth");
        }
    }

    const int n_frames = static_cast<int>(gt_frames.size());
    const int first = options.exclude_first_frame ? 1 : 0;
    const int last = n_frames - (options.exclude_last_frame ? 1 : 0);

    std::vector<FrameScore> scores;
    for (int id : object_ids) {
        for (int t = first; t < last; ++t) {
            const BinaryMask pm = label_mask(pred_frames[t], id);
            const BinaryMask gm = label_mask(gt_frames[t], id);
            scores.push_back(
                {id, t, jaccard(pm, gm), boundary_f(pm, gm, options.boundary)});
        }
    }
    return scores;
}

double round_report(double v) {
    // nearbyint honours the default round-to-nearest, ties-to-even mode
    return std::nearbyint(v * 10000.0) / 10000.0;
}

ScoreReport aggregate(const std::vector<SequenceScores>& sequences,
                      Grouping grouping) {
    std::size_t total = 0;
    for (const SequenceScores& s : sequences) total += s.scores.size();
    if (total == 0) throw std::invalid_argument("aggregate: no scores");

    ScoreReport report;
    report.frames_evaluated = total;
    std::vector<double> seq_j, seq_f;
    std::vector<double> pool_j, pool_f;

    for (const SequenceScores& s : sequences) {
        if (s.scores.empty()) continue;
        // frame scores grouped per object, in first-appearance order
        std::vector<int> ids;
        std::map<int, std::vector<double>> js, fs;
        for (const FrameScore& sc : s.scores) {
            if (!js.count(sc.object_id)) ids.push_back(sc.object_id);
            js[sc.object_id].push_back(sc.j);
            fs[sc.object_id].push_back(sc.f);
            pool_j.push_back(sc.j);
            pool_f.push_back(sc.f);
        }
        std::sort(ids.begin(), ids.end());

        std::vector<double> obj_j, obj_f;
        for (int id : ids) {
            ObjectAggregate oa;
            oa.sequence = s.sequence;
            oa.object_id = id;
            oa.mean_j = mean(js[id]);
            oa.mean_f = mean(fs[id]);
            oa.jf = (oa.mean_j + oa.mean_f) / 2.0;
            oa.frames = js[id].size();
            report.per_object.push_back(oa);
            obj_j.push_back(oa.mean_j);
            obj_f.push_back(oa.mean_f);
        }
        report.objects_evaluated += ids.size();

        SequenceAggregate sa;
        sa.sequence = s.sequence;
        sa.mean_j = mean(obj_j);
        sa.mean_f = mean(obj_f);
        sa.jf = (sa.mean_j + sa.mean_f) / 2.0;
        sa.objects = ids.size();
        report.per_sequence.push_back(sa);
        seq_j.push_back(sa.mean_j);
        seq_f.push_back(sa.mean_f);
    }
    report.sequences_evaluated = report.per_sequence.size();

    if (grouping == Grouping::by_sequence) {
        report.mean_j = mean(seq_j);
        report.mean_f = mean(seq_f);
    } else {
        report.mean_j = mean(pool_j);
        report.mean_f = mean(pool_f);
    }
    report.jf = (report.mean_j + report.mean_f) / 2.0;
    return report;
}

std::string report_to_json(const ScoreReport& report) {
    nlohmann::json doc;
    doc["global"] = {{"J", round_report(report.mean_j)},
                     {"F", round_report(report.mean_f)},
                     {"J&F", round_report(report.jf)}};
    doc["counts"] = {{"frames", report.frames_evaluated},
                     {"objects", report.objects_evaluated},
                     {"sequences", report.sequences_evaluated}};
    doc["sequences"] = nlohmann::json::array();
    for (const SequenceAggregate& sa : report.per_sequence) {
        nlohmann::json seq = {{"name", sa.sequence},
                              {"J", round_report(sa.mean_j)},
                              {"F", round_report(sa.mean_f)},
                              {"J&F", round_report(sa.jf)},
                              {"objects", nlohmann::json::array()}};
        for (const ObjectAggregate& oa : report.per_object) {
            if (oa.sequence != sa.sequence) continue;
            seq["objects"].push_back({{"id", oa.object_id},
                                      {"J", round_report(oa.mean_j)},
                                      {"F", round_report(oa.mean_f)},
                                      {"J&F", round_report(oa.jf)},
                                      {"frames", oa.frames}});
        }
        doc["sequences"].push_back(std::move(seq));
    }
    doc["excluded_frames"] = report.excluded_frames;
    doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

std::string report_table(const ScoreReport& report) {
    std::ostringstream os;
    std::size_t name_w = 8;
    for (const SequenceAggregate& sa : report.per_sequence) {
        name_w = std::max(name_w, sa.sequence.size());
    }
    auto row = [&](const std::string& name, double j, double f, double jf) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f  %.4f  %.4f", round_report(j),
                      round_report(f), round_report(jf));
        os << name << std::string(name_w + 2 - name.size(), ' ') << buf << "\n";
    };
    os << "Sequence" << std::string(name_w + 2 - 8, ' ') << "J       F       J&F\n";
    for (const SequenceAggregate& sa : report.per_sequence) {
        row(sa.sequence, sa.mean_j, sa.mean_f, sa.jf);
    }
    row("global", report.mean_j, report.mean_f, report.jf);
    return os.str();
}

}  // namespace voskit
