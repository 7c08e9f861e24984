#include "voskit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

namespace voskit {

namespace {

using Clock = std::chrono::steady_clock;

// Blobby foreground at roughly one third density, more realistic for
// morphology than uniform noise.
BinaryMask synthetic_mask(int w, int h, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    BinaryMask m(w, h);
    const int blobs = 400;
    for (int i = 0; i < blobs; ++i) {
        const int cx = static_cast<int>(gen() % static_cast<std::uint64_t>(w));
        const int cy = static_cast<int>(gen() % static_cast<std::uint64_t>(h));
        const int r = 8 + static_cast<int>(gen() % 40);
        for (int y = std::max(0, cy - r); y <= std::min(h - 1, cy + r); ++y) {
            for (int x = std::max(0, cx - r); x <= std::min(w - 1, cx + r); ++x) {
                const int dx = x - cx, dy = y - cy;
                if (dx * dx + dy * dy <= r * r) m.set(x, y, true);
            }
        }
    }
    return m;
}

BinaryMask crop(const BinaryMask& m, int x0, int y0, int w, int h) {
    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) out.set(x, y, m.get(x0 + x, y0 + y));
    }
    return out;
}

template <typename Fn>
double time_mpix_per_s(Fn&& fn, std::size_t pixels, double min_seconds) {
    // warm-up pass, then enough repetitions to cover min_seconds
    fn();
    int iters = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        fn();
        ++iters;
        elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < min_seconds);
    return static_cast<double>(pixels) * iters / elapsed / 1e6;
}

}  // namespace

std::vector<DilateBenchRow> run_dilate_bench(std::uint64_t seed) {
    const int w = 1920, h = 1080;
    const BinaryMask full = synthetic_mask(w, h, seed);
    const BinaryMask sample = crop(full, 480, 270, 512, 512);

    std::vector<DilateBenchRow> rows;
    for (SeShape shape : {SeShape::square, SeShape::disk}) {
        for (int radius : {1, 2, 3, 5}) {
            const StructuringElement se{shape, radius};
            DilateBenchRow row;
            row.shape = shape;
            row.radius = radius;

            const BinaryMask fast = dilate(sample, se);
            const BinaryMask ref = brute_force_dilate(sample, se);
            if (!(fast == ref)) {
                row.verified = false;
                for (int y = 0; y < sample.height && row.mismatch.empty(); ++y) {
                    for (int x = 0; x < sample.width; ++x) {
                        if (fast.get(x, y) != ref.get(x, y)) {
                            char buf[64];
                            std::snprintf(buf, sizeof buf, "pixel (%d, %d)", x, y);
                            row.mismatch = buf;
                            break;
                        }
                    }
                }
                rows.push_back(row);
                continue;
            }

            row.fast_mpix_per_s =
                time_mpix_per_s([&] { dilate(full, se); }, full.pixel_count(), 0.25);
            row.reference_mpix_per_s = time_mpix_per_s(
                [&] { brute_force_dilate(sample, se); }, sample.pixel_count(), 0.25);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace voskit
