#include "voskit/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "voskit/mask_io.hpp"

namespace voskit {

namespace {

// mt19937_64 output is fully specified, so raw draws keep fixtures
// reproducible across standard libraries.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

void paint_rect(LabelMap& map, int id, int x0, int y0, int w, int h) {
    for (int y = std::max(0, y0); y < std::min(map.height, y0 + h); ++y) {
        for (int x = std::max(0, x0); x < std::min(map.width, x0 + w); ++x) {
            map.at(x, y) = static_cast<std::uint8_t>(id);
        }
    }
}

void paint_disk(LabelMap& map, int id, int cx, int cy, int r) {
    for (int y = std::max(0, cy - r); y <= std::min(map.height - 1, cy + r); ++y) {
        for (int x = std::max(0, cx - r); x <= std::min(map.width - 1, cx + r); ++x) {
            const int dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r * r) map.at(x, y) = static_cast<std::uint8_t>(id);
        }
    }
}

FixtureSequence make_blob_gap(Rng& rng, int frames) {
    FixtureSequence seq{"blob_gap", {}};
    const int w = 96, h = 64, gap = 2;
    const int split = rng.uniform(34, 50);
    const int top = rng.uniform(8, 16);
    const int blob_h = rng.uniform(20, 30);
    const int left_w = rng.uniform(18, 26);
    const int right_w = rng.uniform(18, 26);
    for (int t = 0; t < frames; ++t) {
        LabelMap m(w, h);
        // both blobs drift together so the channel width stays fixed
        paint_rect(m, 1, split - left_w, top + t, left_w, blob_h);
        paint_rect(m, 2, split + gap, top + t, right_w, blob_h);
        seq.frames.push_back(std::move(m));
    }
    return seq;
}

FixtureSequence make_crossing(Rng& rng, int frames) {
    FixtureSequence seq{"crossing", {}};
    const int w = 96, h = 64;
    const int r1 = rng.uniform(8, 12);
    const int r2 = rng.uniform(8, 12);
    const int cy = h / 2 + rng.uniform(-4, 4);
    for (int t = 0; t < frames; ++t) {
        LabelMap m(w, h);
        const int x1 = 16 + t * (w - 32) / (frames - 1);
        const int x2 = w - 16 - t * (w - 32) / (frames - 1);
        // painted in id order, so object 2 occludes 1 while they cross
        paint_disk(m, 1, x1, cy, r1);
        paint_disk(m, 2, x2, cy, r2);
        seq.frames.push_back(std::move(m));
    }
    return seq;
}

FixtureSequence make_vanish(Rng& rng, int frames) {
    FixtureSequence seq{"vanish", {}};
    const int w = 96, h = 64;
    const int r1 = rng.uniform(9, 13);
    const int r2 = rng.uniform(6, 9);
    for (int t = 0; t < frames; ++t) {
        LabelMap m(w, h);
        paint_disk(m, 1, 24, 24 + t, r1);
        const bool gone = t >= frames / 3 && t < frames - frames / 3;
        if (!gone) paint_disk(m, 2, 70, 40 - t, r2);
        seq.frames.push_back(std::move(m));
    }
    return seq;
}

}  // namespace

LabelMap make_two_blob_frame(int width, int height, int gap_px,
                             bool vertical_channel) {
    LabelMap m(width, height);
    if (vertical_channel) {
        const int split = (width - gap_px) / 2;
        paint_rect(m, 1, 2, 2, split - 2, height - 4);
        paint_rect(m, 2, split + gap_px, 2, width - split - gap_px - 2, height - 4);
    } else {
        const int split = (height - gap_px) / 2;
        paint_rect(m, 1, 2, 2, width - 4, split - 2);
        paint_rect(m, 2, 2, split + gap_px, width - 4, height - split - gap_px - 2);
    }
    return m;
}

std::vector<FixtureSequence> make_fixture_sequences(std::uint64_t seed) {
    Rng rng(seed);
    const int frames = 6;
    std::vector<FixtureSequence> seqs;
    seqs.push_back(make_blob_gap(rng, frames));
    seqs.push_back(make_crossing(rng, frames));
    seqs.push_back(make_vanish(rng, frames));
    return seqs;
}

void write_fixture_tree(const std::filesystem::path& root, std::uint64_t seed) {
    for (const FixtureSequence& seq : make_fixture_sequences(seed)) {
        const std::filesystem::path dir = root / seq.name;
        std::filesystem::create_directories(dir);
        for (std::size_t t = 0; t < seq.frames.size(); ++t) {
            char name[16];
            std::snprintf(name, sizeof name, "%05zu.png", t);
            write_mask_file(seq.frames[t], dir / name);
        }
    }
}

}  // namespace voskit
