#include "voskit/raster.hpp"

#include <algorithm>
#include <stdexcept>

namespace voskit {

namespace {

void check_dims(int w, int h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("raster dimensions must be >= 1");
    }
}

}  // namespace

LabelMap::LabelMap(int w, int h, std::uint8_t fill)
    : width(w), height(h) {
    check_dims(w, h);
    labels.assign(static_cast<std::size_t>(w) * h, fill);
}

BinaryMask::BinaryMask(int w, int h, bool fill)
    : width(w), height(h) {
    check_dims(w, h);
    bits.assign(static_cast<std::size_t>(w) * h, fill ? 1 : 0);
}

std::size_t foreground_count(const BinaryMask& mask) {
    std::size_t n = 0;
    for (std::uint8_t b : mask.bits) n += b;
    return n;
}

bool is_subset(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) return false;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        if (a.bits[i] && !b.bits[i]) return false;
    }
    return true;
}

std::array<std::size_t, 256> label_histogram(const LabelMap& map) {
    std::array<std::size_t, 256> hist{};
    for (std::uint8_t v : map.labels) ++hist[v];
    return hist;
}

ObjectSet split_labels(const LabelMap& map) {
    ObjectSet out;
    out.width = map.width;
    out.height = map.height;

    std::array<bool, 256> present{};
    for (std::uint8_t v : map.labels) present[v] = true;

    // index of each id's entry, 0 = absent
    std::array<int, 256> slot{};
    for (int id = 1; id <= kMaxLabel; ++id) {
        if (!present[id]) continue;
        out.entries.push_back({id, BinaryMask(map.width, map.height)});
        slot[id] = static_cast<int>(out.entries.size());
    }
    if (out.entries.empty()) return out;

    for (std::size_t i = 0; i < map.labels.size(); ++i) {
        const std::uint8_t v = map.labels[i];
        if (v != 0) out.entries[slot[v] - 1].mask.bits[i] = 1;
    }
    return out;
}

LabelMap merge_labels(const ObjectSet& objs) {
    check_dims(objs.width, objs.height);
    for (const ObjectEntry& e : objs.entries) {
        if (e.mask.width != objs.width || e.mask.height != objs.height) {
            throw std::invalid_argument("merge_labels: mask dimensions differ from set");
        }
        if (e.id < 1 || e.id > kMaxLabel) {
            throw std::invalid_argument("merge_labels: object id out of [1, 255]");
        }
    }

    LabelMap out(objs.width, objs.height);
    for (const ObjectEntry& e : objs.entries) {
        const auto id = static_cast<std::uint8_t>(e.id);
        for (std::size_t i = 0; i < e.mask.bits.size(); ++i) {
            if (e.mask.bits[i] && id > out.labels[i]) out.labels[i] = id;
        }
    }
    return out;
}

LabelMap resize_labelmap(const LabelMap& map, int new_width, int new_height) {
    check_dims(map.width, map.height);
    if (new_width < 1 || new_height < 1) {
        throw std::invalid_argument("resize_labelmap: target dimensions must be >= 1");
    }
    if (new_width == map.width && new_height == map.height) return map;

    // floor((dst + 0.5) * src / dst) in exact integer arithmetic
    auto src_index = [](int dst, std::int64_t src_size, std::int64_t dst_size) {
        std::int64_t s = ((2 * static_cast<std::int64_t>(dst) + 1) * src_size) / (2 * dst_size);
        return static_cast<int>(std::clamp<std::int64_t>(s, 0, src_size - 1));
    };

    std::vector<int> src_x(new_width);
    for (int x = 0; x < new_width; ++x) src_x[x] = src_index(x, map.width, new_width);

    LabelMap out(new_width, new_height);
    for (int y = 0; y < new_height; ++y) {
        const std::uint8_t* src_row = map.row(src_index(y, map.height, new_height));
        std::uint8_t* dst_row = out.row(y);
        for (int x = 0; x < new_width; ++x) dst_row[x] = src_row[src_x[x]];
    }
    return out;
}

}  // namespace voskit
