#pragma once

// Shared builders, deterministic generators, and independent reference
// implementations (oracles) for the test suites. Everything here must stay
// naive and obviously correct; none of it may call the fast production
// kernels it is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "voskit/raster.hpp"

namespace voskit::testing {

// ".#.|##." -> 3x2 mask, '#' = foreground, rows separated by '|'
inline BinaryMask mask_from_art(const std::string& art) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : art) {
        if (c == '|') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rows.push_back(cur);
    BinaryMask m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) m.set(x, y, rows[y][x] == '#');
    }
    return m;
}

// "012|340" -> labels from digits
inline LabelMap map_from_art(const std::string& art) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : art) {
        if (c == '|') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rows.push_back(cur);
    LabelMap m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            m.at(x, y) = static_cast<std::uint8_t>(rows[y][x] - '0');
        }
    }
    return m;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return uniform(0, 99) < percent; }
};

inline BinaryMask random_mask(Rng& rng, int w, int h, int density_percent = 40) {
    BinaryMask m(w, h);
    for (auto& b : m.bits) b = rng.chance(density_percent) ? 1 : 0;
    return m;
}

inline LabelMap random_labelmap(Rng& rng, int w, int h, int max_label = 4) {
    LabelMap m(w, h);
    for (auto& v : m.labels) v = static_cast<std::uint8_t>(rng.uniform(0, max_label));
    return m;
}

// Decodes a mask index i over a w*h grid; enumerates every possible mask.
inline BinaryMask mask_from_index(std::uint32_t index, int w, int h) {
    BinaryMask m(w, h);
    for (std::size_t p = 0; p < m.bits.size(); ++p) {
        m.bits[p] = (index >> p) & 1u;
    }
    return m;
}

// Erosion reference: all footprint positions (shape tested literally) must be
// in-frame foreground.
inline BinaryMask reference_erode(const BinaryMask& mask, bool disk, int r) {
    BinaryMask out(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            bool ok = true;
            for (int dy = -r; dy <= r && ok; ++dy) {
                for (int dx = -r; dx <= r; ++dx) {
                    if (disk && dx * dx + dy * dy > r * r) continue;
                    const int xx = x + dx, yy = y + dy;
                    if (xx < 0 || xx >= mask.width || yy < 0 || yy >= mask.height ||
                        !mask.get(xx, yy)) {
                        ok = false;
                        break;
                    }
                }
            }
            out.set(x, y, ok);
        }
    }
    return out;
}

// Boundary per the 4-neighbour definition, written independently of the
// production extract_boundary.
inline BinaryMask reference_boundary(const BinaryMask& mask) {
    BinaryMask out(mask.width, mask.height);
    auto bg = [&](int x, int y) {
        return x < 0 || x >= mask.width || y < 0 || y >= mask.height ||
               !mask.get(x, y);
    };
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.get(x, y)) continue;
            if (bg(x - 1, y) || bg(x + 1, y) || bg(x, y - 1) || bg(x, y + 1)) {
                out.set(x, y, true);
            }
        }
    }
    return out;
}

// Boundary F reference: literal pairwise Euclidean matching between boundary
// pixel sets, then F = 2PR/(P+R) with the empty-set conventions.
inline double reference_boundary_f(const BinaryMask& pred, const BinaryMask& gt,
                                   int radius) {
    const BinaryMask bp = reference_boundary(pred);
    const BinaryMask bg = reference_boundary(gt);
    std::vector<std::pair<int, int>> ps, gs;
    for (int y = 0; y < bp.height; ++y) {
        for (int x = 0; x < bp.width; ++x) {
            if (bp.get(x, y)) ps.emplace_back(x, y);
            if (bg.get(x, y)) gs.emplace_back(x, y);
        }
    }
    if (ps.empty() && gs.empty()) return 1.0;
    if (ps.empty() || gs.empty()) return 0.0;

    auto matched = [&](const std::pair<int, int>& a,
                       const std::vector<std::pair<int, int>>& others) {
        for (const auto& b : others) {
            const int dx = a.first - b.first, dy = a.second - b.second;
            if (dx * dx + dy * dy <= radius * radius) return true;
        }
        return false;
    };
    std::size_t p_hit = 0, r_hit = 0;
    for (const auto& p : ps) p_hit += matched(p, gs) ? 1 : 0;
    for (const auto& g : gs) r_hit += matched(g, ps) ? 1 : 0;
    const double precision = static_cast<double>(p_hit) / ps.size();
    const double recall = static_cast<double>(r_hit) / gs.size();
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

}  // namespace voskit::testing
