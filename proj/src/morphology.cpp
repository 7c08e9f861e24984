#include "voskit/morphology.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace voskit {

namespace {

// Parallelising tiny frames costs more than it saves.
constexpr long kParallelMinPixels = 1 << 14;

void check_se(const StructuringElement& se) {
    if (se.radius < 0) throw std::invalid_argument("structuring element radius must be >= 0");
}

// out[x] = OR of in[x-k .. x+k], window clipped to the row.
void hdilate_row(const std::uint8_t* in, std::uint8_t* out, int w, int k) {
    int sum = 0;
    for (int x = 0; x <= std::min(k - 1, w - 1); ++x) sum += in[x];
    for (int x = 0; x < w; ++x) {
        if (x + k < w) sum += in[x + k];
        out[x] = sum > 0 ? 1 : 0;
        if (x - k >= 0) sum -= in[x - k];
    }
}

// out[x] = AND of in[x-k .. x+k]; a window leaving the row fails.
void herode_row(const std::uint8_t* in, std::uint8_t* out, int w, int k) {
    const int full = 2 * k + 1;
    int sum = 0;
    for (int x = 0; x <= std::min(k - 1, w - 1); ++x) sum += in[x];
    for (int x = 0; x < w; ++x) {
        if (x + k < w) sum += in[x + k];
        out[x] = (x - k >= 0 && x + k < w && sum == full) ? 1 : 0;
        if (x - k >= 0) sum -= in[x - k];
    }
}

// The footprint decomposes into one horizontal span per row offset dy, so a
// pass per distinct half-width plus a vertical combine covers both shapes.
// Plane index per |dy| is precomputed; squares collapse to a single plane.
struct SpanPlan {
    int radius;
    std::vector<int> plane_of_dy;      // |dy| -> plane index
    std::vector<int> plane_halfwidth;  // plane index -> half-width
};

SpanPlan plan_spans(const StructuringElement& se) {
    SpanPlan plan;
    plan.radius = se.radius;
    plan.plane_of_dy.resize(se.radius + 1);
    for (int dy = 0; dy <= se.radius; ++dy) {
        const int k = se.row_halfwidth(dy);
        int idx = -1;
        for (std::size_t i = 0; i < plan.plane_halfwidth.size(); ++i) {
            if (plan.plane_halfwidth[i] == k) idx = static_cast<int>(i);
        }
        if (idx < 0) {
            plan.plane_halfwidth.push_back(k);
            idx = static_cast<int>(plan.plane_halfwidth.size()) - 1;
        }
        plan.plane_of_dy[dy] = idx;
    }
    return plan;
}

}  // namespace

std::vector<std::pair<int, int>> StructuringElement::offsets() const {
    std::vector<std::pair<int, int>> offs;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (shape == SeShape::disk && dx * dx + dy * dy > radius * radius) continue;
            offs.emplace_back(dx, dy);
        }
    }
    return offs;
}

int StructuringElement::row_halfwidth(int dy) const {
    const int ady = dy < 0 ? -dy : dy;
    if (ady > radius) return -1;
    if (shape == SeShape::square) return radius;
    int k = 0;
    while ((k + 1) * (k + 1) + ady * ady <= radius * radius) ++k;
    return k;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
    check_se(se);
    if (se.radius == 0 || mask.pixel_count() == 0) return mask;

    const int w = mask.width, h = mask.height, r = se.radius;
    const SpanPlan plan = plan_spans(se);
    const bool parallel = mask.pixel_count() >= kParallelMinPixels;

    std::vector<BinaryMask> planes(plan.plane_halfwidth.size());
    for (std::size_t p = 0; p < planes.size(); ++p) {
        planes[p] = BinaryMask(w, h);
        const int k = plan.plane_halfwidth[p];
#pragma omp parallel for schedule(static) if (parallel)
        for (int y = 0; y < h; ++y) {
            hdilate_row(mask.row(y), planes[p].row(y), w, k);
        }
    }

    BinaryMask out(w, h);
#pragma omp parallel for schedule(static) if (parallel)
    for (int y = 0; y < h; ++y) {
        std::uint8_t* dst = out.row(y);
        for (int dy = -r; dy <= r; ++dy) {
            const int yy = y + dy;
            if (yy < 0 || yy >= h) continue;
            const std::uint8_t* src = planes[plan.plane_of_dy[std::abs(dy)]].row(yy);
            for (int x = 0; x < w; ++x) dst[x] |= src[x];
        }
    }
    return out;
}

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
    check_se(se);
    if (se.radius == 0 || mask.pixel_count() == 0) return mask;

    const int w = mask.width, h = mask.height, r = se.radius;
    const SpanPlan plan = plan_spans(se);
    const bool parallel = mask.pixel_count() >= kParallelMinPixels;

    std::vector<BinaryMask> planes(plan.plane_halfwidth.size());
    for (std::size_t p = 0; p < planes.size(); ++p) {
        planes[p] = BinaryMask(w, h);
        const int k = plan.plane_halfwidth[p];
#pragma omp parallel for schedule(static) if (parallel)
        for (int y = 0; y < h; ++y) {
            herode_row(mask.row(y), planes[p].row(y), w, k);
        }
    }

    BinaryMask out(w, h);
#pragma omp parallel for schedule(static) if (parallel)
    for (int y = 0; y < h; ++y) {
        std::uint8_t* dst = out.row(y);
        if (y - r < 0 || y + r >= h) continue;  // footprint leaves the frame
        std::memset(dst, 1, static_cast<std::size_t>(w));
        for (int dy = -r; dy <= r; ++dy) {
            const std::uint8_t* src = planes[plan.plane_of_dy[std::abs(dy)]].row(y + dy);
            for (int x = 0; x < w; ++x) dst[x] &= src[x];
        }
    }
    return out;
}

BinaryMask brute_force_dilate(const BinaryMask& mask, const StructuringElement& se) {
    check_se(se);
    const int w = mask.width, h = mask.height, r = se.radius;
    const bool disk = se.shape == SeShape::disk;

    BinaryMask out(mask);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t hit = 0;
            for (int dy = -r; dy <= r && !hit; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= h) continue;
                for (int dx = -r; dx <= r; ++dx) {
                    const int xx = x + dx;
                    if (xx < 0 || xx >= w) continue;
                    if (disk && dx * dx + dy * dy > r * r) continue;
                    if (mask.get(xx, yy)) {
                        hit = 1;
                        break;
                    }
                }
            }
            out.set(x, y, hit != 0);
        }
    }
    return out;
}

}  // namespace voskit
