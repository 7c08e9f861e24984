#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "voskit/raster.hpp"

using namespace voskit;
using namespace voskit::testing;

TEST_CASE("split_labels on an all-zero map yields an empty set") {
    const ObjectSet objs = split_labels(LabelMap(4, 4));
    CHECK(objs.entries.empty());
    CHECK(objs.width == 4);
}

TEST_CASE("split_labels enumerates pixels by label") {
    const ObjectSet objs = split_labels(map_from_art("1120"));
    REQUIRE(objs.entries.size() == 2);
    CHECK(objs.entries[0].id == 1);
    CHECK(objs.entries[0].mask == mask_from_art("##.."));
    CHECK(objs.entries[1].id == 2);
    CHECK(objs.entries[1].mask == mask_from_art("..#."));
}

TEST_CASE("split_labels single label everywhere") {
    const ObjectSet objs = split_labels(LabelMap(3, 2, 7));
    REQUIRE(objs.entries.size() == 1);
    CHECK(objs.entries[0].id == 7);
    CHECK(foreground_count(objs.entries[0].mask) == 6);
}

TEST_CASE("merge_labels inverts split_labels on every map") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(1, 12), rng.uniform(1, 12),
                                           rng.uniform(0, 9));
        CHECK(merge_labels(split_labels(m)) == m);
    }
}

TEST_CASE("merge_labels gives contested pixels to the highest id") {
    ObjectSet objs;
    objs.width = 1;
    objs.height = 1;
    objs.entries.push_back({3, mask_from_art("#")});
    objs.entries.push_back({1, mask_from_art("#")});
    CHECK(merge_labels(objs).at(0, 0) == 3);
}

TEST_CASE("merge_labels of an empty set is an all-zero map") {
    ObjectSet objs;
    objs.width = 2;
    objs.height = 2;
    CHECK(merge_labels(objs) == LabelMap(2, 2));
}

TEST_CASE("merge_labels is order-independent") {
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        ObjectSet objs;
        objs.width = rng.uniform(1, 10);
        objs.height = rng.uniform(1, 10);
        const int n = rng.uniform(0, 5);
        for (int k = 0; k < n; ++k) {
            objs.entries.push_back({rng.uniform(1, 9),
                                    random_mask(rng, objs.width, objs.height, 50)});
        }
        const LabelMap base = merge_labels(objs);
        std::shuffle(objs.entries.begin(), objs.entries.end(), rng.gen);
        CHECK(merge_labels(objs) == base);
    }
}

TEST_CASE("merge_labels rejects mismatched mask dimensions") {
    ObjectSet objs;
    objs.width = 2;
    objs.height = 2;
    objs.entries.push_back({1, BinaryMask(3, 2)});
    CHECK_THROWS_AS(merge_labels(objs), std::invalid_argument);
}

TEST_CASE("resize to identical dimensions is the identity") {
    Rng rng(103);
    const LabelMap m = random_labelmap(rng, 4, 4);
    CHECK(resize_labelmap(m, 4, 4) == m);
}

TEST_CASE("resize follows the floor((i+0.5)/ratio) source index") {
    CHECK(resize_labelmap(map_from_art("12"), 4, 1) == map_from_art("1122"));
    // shrink picks the sample at the centre of each destination cell
    CHECK(resize_labelmap(map_from_art("1122"), 2, 1) == map_from_art("12"));
    CHECK(resize_labelmap(map_from_art("123"), 1, 1) == map_from_art("2"));
}

TEST_CASE("resizing a constant field stays constant") {
    const LabelMap m(2, 2, 9);
    const LabelMap r = resize_labelmap(m, 7, 5);
    CHECK(r.width == 7);
    CHECK(r.height == 5);
    for (auto v : r.labels) CHECK(v == 9);
}

TEST_CASE("resize never fabricates labels") {
    Rng rng(104);
    for (int i = 0; i < 200; ++i) {
        const LabelMap m = random_labelmap(rng, rng.uniform(1, 9), rng.uniform(1, 9));
        const LabelMap r =
            resize_labelmap(m, rng.uniform(1, 20), rng.uniform(1, 20));
        const auto before = label_histogram(m);
        const auto after = label_histogram(r);
        for (int v = 0; v < 256; ++v) {
            if (after[v] > 0) CHECK(before[v] > 0);
        }
    }
}

TEST_CASE("resize rejects zero targets") {
    CHECK_THROWS_AS(resize_labelmap(LabelMap(2, 2), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(resize_labelmap(LabelMap(2, 2), 2, 0), std::invalid_argument);
}

TEST_CASE("resize round-trips exactly for integral upscales") {
    Rng rng(105);
    const LabelMap m = random_labelmap(rng, 6, 5);
    CHECK(resize_labelmap(resize_labelmap(m, 18, 15), 6, 5) == m);
}
