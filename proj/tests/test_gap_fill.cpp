#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "voskit/fixtures.hpp"
#include "voskit/gap_fill.hpp"

using namespace voskit;
using namespace voskit::testing;

namespace {

constexpr GapFillConfig radius(int r, SeShape shape = SeShape::square) {
    return {{shape, r}, true};
}

// background pixels strictly inside the channel between the two blobs
std::size_t channel_background(const LabelMap& m) {
    std::size_t n = 0;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            if (m.at(x, y) != 0) continue;
            // counted when object 1 lies somewhere left and object 2 right
            bool left = false, right = false;
            for (int i = 0; i < x; ++i) left |= m.at(i, y) == 1;
            for (int i = x + 1; i < m.width; ++i) right |= m.at(i, y) == 2;
            if (left && right) ++n;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("the 1x7 worked example fills its gap with the higher id") {
    const LabelMap in = map_from_art("1110222");
    CHECK(gap_fill(in, radius(1)) == map_from_art("1112222"));
}

TEST_CASE("radius 0 is the identity") {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(1, 12), rng.uniform(1, 12));
        CHECK(gap_fill(m, radius(0)) == m);
    }
}

TEST_CASE("a single object is never changed") {
    Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        LabelMap m(rng.uniform(2, 12), rng.uniform(2, 12));
        for (auto& v : m.labels) v = rng.chance(40) ? 5 : 0;
        CHECK(gap_fill(m, radius(rng.uniform(1, 3))) == m);
    }
}

TEST_CASE("input labels survive exactly when fills stay on background") {
    Rng rng(33);
    for (int i = 0; i < 150; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(2, 14), rng.uniform(2, 14),
                                           rng.uniform(2, 5));
        const LabelMap out = gap_fill(m, radius(rng.uniform(1, 3)));
        for (std::size_t p = 0; p < m.labels.size(); ++p) {
            if (m.labels[p] != 0) CHECK(out.labels[p] == m.labels[p]);
        }
    }
}

TEST_CASE("every filled pixel lies within SE reach of two distinct objects") {
    Rng rng(34);
    for (int i = 0; i < 100; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(2, 12), rng.uniform(2, 12),
                                           rng.uniform(2, 4));
        const SeShape shape = rng.chance(50) ? SeShape::square : SeShape::disk;
        const StructuringElement se{shape, rng.uniform(1, 3)};
        const LabelMap out = gap_fill(m, {se, true});

        // independent coverage check through the naive dilation
        const ObjectSet objs = split_labels(m);
        std::vector<BinaryMask> dil;
        for (const ObjectEntry& e : objs.entries) {
            dil.push_back(brute_force_dilate(e.mask, se));
        }
        for (std::size_t p = 0; p < m.labels.size(); ++p) {
            if (m.labels[p] != 0 || out.labels[p] == 0) continue;
            int covering = 0;
            for (const BinaryMask& d : dil) covering += d.bits[p];
            CHECK(covering >= 2);
        }
    }
}

TEST_CASE("without the background restriction fills may overwrite lower ids") {
    // radius 2 makes the overlap band reach into both objects; the literal
    // merge-with-priority reading hands object 1's inner pixel to object 2
    const LabelMap in = map_from_art("11022");
    CHECK(gap_fill(in, {{SeShape::square, 2}, true}) == map_from_art("11222"));
    CHECK(gap_fill(in, {{SeShape::square, 2}, false}) == map_from_art("12222"));
}

TEST_CASE("adjacency via dilation overlap on a 1x7 row") {
    const ObjectSet objs = split_labels(map_from_art("1110222"));
    CHECK(adjacency_pairs(objs, {SeShape::square, 1}) ==
          std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(adjacency_pairs(objs, {SeShape::square, 0}).empty());
}

TEST_CASE("objects separated beyond dilation reach are not adjacent") {
    LabelMap m(20, 5);
    m.at(1, 2) = 1;
    m.at(18, 2) = 2;  // 16 background columns between them
    for (int r = 1; r <= 3; ++r) {
        CHECK(adjacency_pairs(split_labels(m), {SeShape::square, r}).empty());
        CHECK(gap_fill(m, radius(r)) == m);
    }
}

TEST_CASE("a single-object set has no pairs") {
    CHECK(adjacency_pairs(split_labels(map_from_art("111")), {SeShape::square, 2})
              .empty());
}

TEST_CASE("adjacency rejects mismatched dimensions") {
    ObjectSet objs;
    objs.width = 3;
    objs.height = 1;
    objs.entries.push_back({1, BinaryMask(2, 1)});
    CHECK_THROWS_AS(adjacency_pairs(objs, {SeShape::square, 1}),
                    std::invalid_argument);
}

TEST_CASE("foreground never shrinks and stays inside the dilated union") {
    Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(2, 12), rng.uniform(2, 12),
                                           rng.uniform(2, 4));
        const StructuringElement se{SeShape::square, rng.uniform(1, 3)};
        const LabelMap out = gap_fill(m, {se, true});

        const ObjectSet objs = split_labels(m);
        BinaryMask dilated_union(m.width, m.height);
        for (const ObjectEntry& e : objs.entries) {
            const BinaryMask d = brute_force_dilate(e.mask, se);
            for (std::size_t p = 0; p < d.bits.size(); ++p) {
                dilated_union.bits[p] |= d.bits[p];
            }
        }
        for (std::size_t p = 0; p < m.labels.size(); ++p) {
            if (m.labels[p] != 0) CHECK(out.labels[p] != 0);
            if (out.labels[p] != 0) CHECK(dilated_union.bits[p] == 1);
        }
    }
}

TEST_CASE("channel background between two blobs never grows with radius") {
    for (int gap : {1, 2, 3, 4, 6}) {
        const LabelMap frame = make_two_blob_frame(48, 32, gap, true);
        std::size_t prev = channel_background(frame);
        CHECK(prev >= static_cast<std::size_t>(gap));
        for (int r : {0, 1, 2, 3, 5}) {
            const std::size_t now = channel_background(gap_fill(frame, radius(r)));
            CHECK(now <= prev);
            prev = now;
            // pairwise dilations span the whole channel once r reaches its width
            if (r >= gap) CHECK(now == 0);
            if (r > 0 && 2 * r < gap + 1) CHECK(now == channel_background(frame));
        }
    }
}

TEST_CASE("gap_fill_sequence equals per-frame calls and keeps order") {
    Rng rng(36);
    std::vector<LabelMap> frames;
    for (int i = 0; i < 8; ++i) frames.push_back(random_labelmap(rng, 10, 8, 3));
    const auto out = gap_fill_sequence(frames, radius(2));
    REQUIRE(out.size() == frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) {
        CHECK(out[i] == gap_fill(frames[i], radius(2)));
    }
    CHECK(gap_fill_sequence({}, radius(2)).empty());
}

TEST_CASE("gap_fill_sequence rejects mixed dimensions") {
    CHECK_THROWS_AS(gap_fill_sequence({LabelMap(2, 2), LabelMap(3, 2)}, radius(1)),
                    std::invalid_argument);
}
