#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "voskit/morphology.hpp"

using namespace voskit;
using namespace voskit::testing;

namespace {

// b with a's foreground forced on (so a ⊆ result)
BinaryMask union_of(const BinaryMask& a, const BinaryMask& b) {
    BinaryMask out = b;
    for (std::size_t i = 0; i < a.bits.size(); ++i) out.bits[i] |= a.bits[i];
    return out;
}

}  // namespace

TEST_CASE("radius 0 is the identity for both operations") {
    Rng rng(21);
    for (SeShape shape : {SeShape::square, SeShape::disk}) {
        const BinaryMask m = random_mask(rng, 9, 7);
        CHECK(dilate(m, {shape, 0}) == m);
        CHECK(erode(m, {shape, 0}) == m);
        CHECK(brute_force_dilate(m, {shape, 0}) == m);
    }
}

TEST_CASE("dilating an empty mask stays empty") {
    const BinaryMask empty(6, 6);
    CHECK(dilate(empty, {SeShape::square, 3}) == empty);
    CHECK(brute_force_dilate(empty, {SeShape::disk, 2}) == empty);
}

TEST_CASE("a point dilates to the footprint") {
    BinaryMask m(5, 5);
    m.set(2, 2, true);
    CHECK(dilate(m, {SeShape::square, 1}) ==
          mask_from_art(".....|.###.|.###.|.###.|....."));
    // disk radius 2 covers the 13 offsets with dx^2+dy^2 <= 4
    const BinaryMask d = dilate(m, {SeShape::disk, 2});
    CHECK(foreground_count(d) == 13);
    CHECK(d == mask_from_art("..#..|.###.|#####|.###.|..#.."));
    CHECK(StructuringElement{SeShape::disk, 2}.offsets().size() == 13);
}

TEST_CASE("eroding a 3x3 full mask with square radius 1 leaves the centre") {
    const BinaryMask full(3, 3, true);
    CHECK(erode(full, {SeShape::square, 1}) == mask_from_art("...|.#.|..."));
    CHECK(erode(full, {SeShape::square, 0}) == full);
}

TEST_CASE("dilate equals the brute-force oracle exhaustively on tiny grids") {
    for (int w = 1; w <= 3; ++w) {
        for (int h = 1; h <= 3; ++h) {
            const std::uint32_t total = 1u << (w * h);
            for (std::uint32_t idx = 0; idx < total; ++idx) {
                const BinaryMask m = mask_from_index(idx, w, h);
                for (SeShape shape : {SeShape::square, SeShape::disk}) {
                    for (int r = 0; r <= 2; ++r) {
                        const StructuringElement se{shape, r};
                        if (!(dilate(m, se) == brute_force_dilate(m, se))) {
                            FAIL("mismatch at ", w, "x", h, " mask ", idx,
                                 " radius ", r);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("dilate equals the brute-force oracle on random masks") {
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const BinaryMask m = random_mask(rng, rng.uniform(1, 16), rng.uniform(1, 16),
                                         rng.uniform(5, 80));
        const StructuringElement se{rng.chance(50) ? SeShape::square : SeShape::disk,
                                    rng.uniform(0, 4)};
        CHECK(dilate(m, se) == brute_force_dilate(m, se));
    }
}

TEST_CASE("erode matches the literal containment reference") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const BinaryMask m = random_mask(rng, rng.uniform(1, 14), rng.uniform(1, 14),
                                         rng.uniform(30, 95));
        const bool disk = rng.chance(50);
        const int r = rng.uniform(0, 3);
        const StructuringElement se{disk ? SeShape::disk : SeShape::square, r};
        CHECK(erode(m, se) == reference_erode(m, disk, r));
    }
}

TEST_CASE("erode satisfies complement-dilate duality on padded grids") {
    Rng rng(24);
    for (int i = 0; i < 120; ++i) {
        const int w = rng.uniform(1, 8), h = rng.uniform(1, 8);
        const BinaryMask m = random_mask(rng, w, h, 60);
        const bool disk = rng.chance(50);
        const int r = rng.uniform(0, 3);
        const StructuringElement se{disk ? SeShape::disk : SeShape::square, r};

        // pad with background, complement, dilate, complement, crop
        BinaryMask padded(w + 2 * r, h + 2 * r);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) padded.set(x + r, y + r, m.get(x, y));
        }
        for (auto& b : padded.bits) b ^= 1;
        const BinaryMask d = brute_force_dilate(padded, se);
        BinaryMask expect(w, h);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) expect.set(x, y, !d.get(x + r, y + r));
        }
        CHECK(erode(m, se) == expect);
    }
}

TEST_CASE("extensivity: dilation grows, erosion shrinks") {
    Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        const BinaryMask m = random_mask(rng, rng.uniform(1, 12), rng.uniform(1, 12));
        const StructuringElement se{rng.chance(50) ? SeShape::square : SeShape::disk,
                                    rng.uniform(0, 3)};
        const BinaryMask d = dilate(m, se);
        const BinaryMask e = erode(m, se);
        CHECK(is_subset(m, d));
        CHECK(is_subset(e, m));
        CHECK(foreground_count(d) >= foreground_count(m));
        CHECK(foreground_count(e) <= foreground_count(m));
    }
}

TEST_CASE("monotonicity: subset inputs give subset outputs") {
    Rng rng(26);
    for (int i = 0; i < 200; ++i) {
        const int w = rng.uniform(1, 12), h = rng.uniform(1, 12);
        const BinaryMask small = random_mask(rng, w, h, 30);
        const BinaryMask large = union_of(small, random_mask(rng, w, h, 30));
        const StructuringElement se{rng.chance(50) ? SeShape::square : SeShape::disk,
                                    rng.uniform(0, 3)};
        CHECK(is_subset(dilate(small, se), dilate(large, se)));
        CHECK(is_subset(erode(small, se), erode(large, se)));
    }
}

TEST_CASE("square radii compose additively") {
    Rng rng(27);
    for (int i = 0; i < 200; ++i) {
        const BinaryMask m = random_mask(rng, rng.uniform(1, 12), rng.uniform(1, 12));
        const int r1 = rng.uniform(0, 3), r2 = rng.uniform(0, 3);
        CHECK(dilate(dilate(m, {SeShape::square, r1}), {SeShape::square, r2}) ==
              dilate(m, {SeShape::square, r1 + r2}));
    }
}

TEST_CASE("a negative radius is rejected") {
    CHECK_THROWS_AS(dilate(BinaryMask(2, 2), {SeShape::square, -1}),
                    std::invalid_argument);
}
