#include "voskit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace voskit {

namespace {

int scaled_dim(int dim, double factor) {
    return std::max(1, static_cast<int>(std::lround(dim * factor)));
}

LabelMap rotate90cw(const LabelMap& in) {
    LabelMap out(in.height, in.width);
    for (int y = 0; y < out.height; ++y) {
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < out.width; ++x) dst[x] = in.at(y, in.height - 1 - x);
    }
    return out;
}

LabelMap rotate180(const LabelMap& in) {
    LabelMap out(in.width, in.height);
    for (int y = 0; y < out.height; ++y) {
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < out.width; ++x) {
            dst[x] = in.at(in.width - 1 - x, in.height - 1 - y);
        }
    }
    return out;
}

LabelMap rotate270cw(const LabelMap& in) {
    LabelMap out(in.height, in.width);
    for (int y = 0; y < out.height; ++y) {
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < out.width; ++x) dst[x] = in.at(in.width - 1 - y, x);
    }
    return out;
}

LabelMap hflip(const LabelMap& in) {
    LabelMap out(in.width, in.height);
    for (int y = 0; y < out.height; ++y) {
        const std::uint8_t* src = in.row(y);
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < out.width; ++x) dst[x] = src[in.width - 1 - x];
    }
    return out;
}

}  // namespace

TtaTransform parse_transform(const std::string& descriptor) {
    if (descriptor == "id") return {TtaKind::identity, 1.0};
    if (descriptor == "rot90") return {TtaKind::rotate90, 1.0};
    if (descriptor == "rot180") return {TtaKind::rotate180, 1.0};
    if (descriptor == "rot270") return {TtaKind::rotate270, 1.0};
    if (descriptor == "hflip") return {TtaKind::hflip, 1.0};
    if (descriptor.rfind("scale:", 0) == 0) {
        const std::string num = descriptor.substr(6);
        std::size_t used = 0;
        double factor = 0.0;
        try {
            factor = std::stod(num, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad transform descriptor: " + descriptor);
        }
        if (used != num.size() || !(factor > 0.0)) {
            throw std::invalid_argument("bad transform descriptor: " + descriptor);
        }
        return TtaTransform::rescale(factor);
    }
    throw std::invalid_argument("bad transform descriptor: " + descriptor);
}

std::string to_descriptor(const TtaTransform& t) {
    switch (t.kind) {
        case TtaKind::identity: return "id";
        case TtaKind::rotate90: return "rot90";
        case TtaKind::rotate180: return "rot180";
        case TtaKind::rotate270: return "rot270";
        case TtaKind::hflip: return "hflip";
        case TtaKind::rescale: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "scale:%g", t.scale_factor);
            return buf;
        }
    }
    throw std::invalid_argument("bad transform kind");
}

LabelMap apply_transform(const LabelMap& map, const TtaTransform& t) {
    switch (t.kind) {
        case TtaKind::identity: return map;
        case TtaKind::rotate90: return rotate90cw(map);
        case TtaKind::rotate180: return rotate180(map);
        case TtaKind::rotate270: return rotate270cw(map);
        case TtaKind::hflip: return hflip(map);
        case TtaKind::rescale:
            if (!(t.scale_factor > 0.0)) {
                throw std::invalid_argument("rescale factor must be > 0");
            }
            return resize_labelmap(map, scaled_dim(map.width, t.scale_factor),
                                   scaled_dim(map.height, t.scale_factor));
    }
    throw std::invalid_argument("bad transform kind");
}

LabelMap invert_transform(const LabelMap& map, const TtaTransform& t,
                          int original_width, int original_height) {
    const bool swaps = t.kind == TtaKind::rotate90 || t.kind == TtaKind::rotate270;
    int expect_w = swaps ? original_height : original_width;
    int expect_h = swaps ? original_width : original_height;
    if (t.kind == TtaKind::rescale) {
        expect_w = scaled_dim(original_width, t.scale_factor);
        expect_h = scaled_dim(original_height, t.scale_factor);
    }
    if (map.width != expect_w || map.height != expect_h) {
        throw std::invalid_argument(
            "invert_transform: map dimensions inconsistent with transform");
    }

    switch (t.kind) {
        case TtaKind::identity: return map;
        case TtaKind::rotate90: return rotate270cw(map);
        case TtaKind::rotate180: return rotate180(map);
        case TtaKind::rotate270: return rotate90cw(map);
        case TtaKind::hflip: return hflip(map);
        case TtaKind::rescale:
            return resize_labelmap(map, original_width, original_height);
    }
    throw std::invalid_argument("bad transform kind");
}

LabelMap vote_fuse(const PredictionStack& stack) {
    if (stack.members.empty()) {
        throw std::invalid_argument("vote_fuse: empty prediction stack");
    }
    const LabelMap& canon = stack.members.front().map;
    for (const StackMember& m : stack.members) {
        if (m.map.width != canon.width || m.map.height != canon.height) {
            throw std::invalid_argument("vote_fuse: member dimensions differ");
        }
    }
    if (stack.members.size() == 1) return canon;

    const int w = canon.width, h = canon.height;
    const int n = static_cast<int>(stack.members.size());
    LabelMap out(w, h);

#pragma omp parallel for schedule(static) if (static_cast<long>(w) * h >= (1L << 14))
    for (int y = 0; y < h; ++y) {
        std::uint32_t counts[256] = {};
        std::vector<const std::uint8_t*> rows(n);
        for (int m = 0; m < n; ++m) rows[m] = stack.members[m].map.row(y);
        std::uint8_t* dst = out.row(y);

        for (int x = 0; x < w; ++x) {
            int best = -1;
            for (int m = 0; m < n; ++m) {
                const std::uint8_t v = rows[m][x];
                if (++counts[v] > (best < 0 ? 0 : counts[best])) best = v;
            }
            // best now holds the smallest label with the maximum count; keep
            // the canonical member's choice instead when it is tied for max.
            const std::uint8_t canon_label = rows[0][x];
            int winner = best;
            for (int v = 0; v < 256 && v < best; ++v) {
                if (counts[v] == counts[best]) {
                    winner = v;
                    break;
                }
            }
            if (counts[canon_label] == counts[winner]) winner = canon_label;
            dst[x] = static_cast<std::uint8_t>(winner);
            for (int m = 0; m < n; ++m) counts[rows[m][x]] = 0;
        }
    }
    return out;
}

std::vector<LabelMap> fuse_sequence(const std::vector<PredictionStack>& stacks) {
    std::vector<LabelMap> out(stacks.size());
    for (std::size_t i = 0; i < stacks.size(); ++i) out[i] = vote_fuse(stacks[i]);
    return out;
}

void ScaleSchedule::validate() const {
    if (scales.empty() || scales.front() != 1.0) {
        throw std::invalid_argument("scale schedule must start at 1.0");
    }
    for (std::size_t i = 1; i < scales.size(); ++i) {
        if (!(scales[i] > scales[i - 1])) {
            throw std::invalid_argument("scale schedule must be strictly increasing");
        }
    }
}

ScaleSchedule parse_scale_schedule(const std::string& csv) {
    ScaleSchedule sched;
    sched.scales.clear();
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        const std::string item = csv.substr(pos, comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad scale value: '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad scale value: '" + item + "'");
        }
        sched.scales.push_back(v);
        pos = comma + 1;
    }
    sched.validate();
    return sched;
}

}  // namespace voskit
