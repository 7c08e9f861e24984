#include "voskit/gap_fill.hpp"

#include <algorithm>
#include <stdexcept>

namespace voskit {

namespace {

struct Box {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // inclusive; empty when x1 < x0
    bool empty() const { return x1 < x0 || y1 < y0; }
};

Box mask_bbox(const BinaryMask& m, int grow, int w, int h) {
    Box b{w, h, -1, -1};
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = m.row(y);
        for (int x = 0; x < w; ++x) {
            if (!row[x]) continue;
            b.x0 = std::min(b.x0, x);
            b.x1 = std::max(b.x1, x);
            b.y0 = std::min(b.y0, y);
            b.y1 = std::max(b.y1, y);
        }
    }
    if (b.empty()) return b;
    b.x0 = std::max(0, b.x0 - grow);
    b.y0 = std::max(0, b.y0 - grow);
    b.x1 = std::min(w - 1, b.x1 + grow);
    b.y1 = std::min(h - 1, b.y1 + grow);
    return b;
}

Box intersect(const Box& a, const Box& b) {
    return Box{std::max(a.x0, b.x0), std::max(a.y0, b.y0),
               std::min(a.x1, b.x1), std::min(a.y1, b.y1)};
}

void check_set_dims(const ObjectSet& objs) {
    for (const ObjectEntry& e : objs.entries) {
        if (e.mask.width != objs.width || e.mask.height != objs.height) {
            throw std::invalid_argument("object masks disagree on dimensions");
        }
    }
}

}  // namespace

std::vector<std::pair<int, int>> adjacency_pairs(const ObjectSet& objs,
                                                 const StructuringElement& se) {
    check_set_dims(objs);
    const int n = static_cast<int>(objs.entries.size());
    const int w = objs.width, h = objs.height;

    std::vector<BinaryMask> dil(n);
    std::vector<Box> boxes(n);
    for (int i = 0; i < n; ++i) {
        dil[i] = dilate(objs.entries[i].mask, se);
        boxes[i] = mask_bbox(objs.entries[i].mask, se.radius, w, h);
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Box box = intersect(boxes[i], boxes[j]);
            if (box.empty()) continue;
            bool touch = false;
            for (int y = box.y0; y <= box.y1 && !touch; ++y) {
                const std::uint8_t* a = dil[i].row(y);
                const std::uint8_t* b = dil[j].row(y);
                for (int x = box.x0; x <= box.x1; ++x) {
                    if (a[x] & b[x]) {
                        touch = true;
                        break;
                    }
                }
            }
            if (touch) {
                pairs.emplace_back(std::min(objs.entries[i].id, objs.entries[j].id),
                                   std::max(objs.entries[i].id, objs.entries[j].id));
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

LabelMap gap_fill(const LabelMap& map, const GapFillConfig& cfg) {
    if (cfg.se.radius < 0) throw std::invalid_argument("kernel radius must be >= 0");
    if (cfg.se.radius == 0) return map;

    ObjectSet objs = split_labels(map);
    const int n = static_cast<int>(objs.entries.size());
    if (n < 2) return map;

    const int w = map.width, h = map.height;
    std::vector<BinaryMask> dil(n);
    std::vector<Box> boxes(n);
    for (int i = 0; i < n; ++i) {
        dil[i] = dilate(objs.entries[i].mask, cfg.se);
        boxes[i] = mask_bbox(objs.entries[i].mask, cfg.se.radius, w, h);
    }

    // Augment both members of each overlapping pair with the shared overlap
    // region; non-adjacent pairs have empty overlap, so no adjacency gate is
    // needed here.
    ObjectSet augmented = objs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Box box = intersect(boxes[i], boxes[j]);
            if (box.empty()) continue;
            for (int y = box.y0; y <= box.y1; ++y) {
                const std::uint8_t* a = dil[i].row(y);
                const std::uint8_t* b = dil[j].row(y);
                const std::uint8_t* in = map.row(y);
                std::uint8_t* oa = augmented.entries[i].mask.row(y);
                std::uint8_t* ob = augmented.entries[j].mask.row(y);
                for (int x = box.x0; x <= box.x1; ++x) {
                    const std::uint8_t fill =
                        a[x] & b[x] & (cfg.fill_background_only ? (in[x] == 0) : 1);
                    oa[x] |= fill;
                    ob[x] |= fill;
                }
            }
        }
    }
    return merge_labels(augmented);
}

std::vector<LabelMap> gap_fill_sequence(const std::vector<LabelMap>& frames,
                                        const GapFillConfig& cfg) {
    for (const LabelMap& f : frames) {
        if (f.width != frames.front().width || f.height != frames.front().height) {
            throw std::invalid_argument("sequence frames disagree on dimensions");
        }
    }
    std::vector<LabelMap> out(frames.size());
    const auto count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
    for (long i = 0; i < count; ++i) {
        out[i] = gap_fill(frames[i], cfg);
    }
    return out;
}

}  // namespace voskit
