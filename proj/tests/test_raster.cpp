#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/oracles.hpp"
#include "voltage/raster.hpp"

using namespace voltage;

TEST_CASE("binarize extremes and blank page") {
    GrayImage g(2, 1);
    g.at(0, 0) = 0;
    g.at(1, 0) = 255;
    const BinaryImage b = binarize(g);
    CHECK(b.data == std::vector<std::uint8_t>{1, 0});

    GrayImage blank(3, 3, 255);
    CHECK(binarize(blank).ink_count() == 0);
}

TEST_CASE("binarize bimodal image via Otsu sweep oracle") {
    GrayImage g(4, 4);
    for (int i = 0; i < 16; ++i) g.data[i] = i < 8 ? 40 : 200;

    // Independent sweep: maximize between-class variance over all cuts.
    double best_var = -1;
    int best_t = 0;
    for (int t = 1; t <= 255; ++t) {
        long n0 = 0, n1 = 0;
        double s0 = 0, s1 = 0;
        for (auto v : g.data)
            if (v < t) {
                n0++;
                s0 += v;
            } else {
                n1++;
                s1 += v;
            }
        if (n0 == 0 || n1 == 0) continue;
        const double m0 = s0 / n0, m1 = s1 / n1;
        const double var = double(n0) * double(n1) * (m0 - m1) * (m0 - m1);
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    CHECK(otsu_threshold(g) == best_t);
    CHECK(binarize(g).ink_count() == 8);
    for (int i = 0; i < 16; ++i) CHECK(binarize(g).data[i] == (i < 8 ? 1 : 0));
}

TEST_CASE("binarize is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        GrayImage g(8, 8);
        for (auto& v : g.data) v = static_cast<std::uint8_t>(rng() % 256);
        const BinaryImage once = binarize(g);
        const BinaryImage twice = binarize(to_gray(once));
        CHECK(once == twice);
    }
}

TEST_CASE("projections match brute-force pixel scans") {
    const auto img = oracle::bitmap({
        "...",
        "###",
        "...",
    });
    CHECK(row_projection(img) == std::vector<long>{0, 3, 0});

    const auto img2 = oracle::bitmap({
        ".#.",
        ".#.",
        ".#.",
    });
    CHECK(col_projection(img2) == std::vector<long>{0, 3, 0});

    const BinaryImage blank(4, 4);
    CHECK(row_projection(blank) == std::vector<long>(4, 0));
    CHECK(col_projection(blank) == std::vector<long>(4, 0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = oracle::random_bitmap(rng, 5);
        CHECK(row_projection(r) == oracle::row_counts(r));
        CHECK(col_projection(r) == oracle::col_counts(r));
    }
}

TEST_CASE("projection sums equal total ink count") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto img = oracle::random_bitmap(rng, 16);
        long rs = 0, cs = 0;
        for (long v : row_projection(img)) rs += v;
        for (long v : col_projection(img)) cs += v;
        CHECK(rs == oracle::ink_total(img));
        CHECK(cs == oracle::ink_total(img));
    }
}

TEST_CASE("enhanced column projection") {
    std::mt19937_64 rng(17);
    SUBCASE("zero penalty equals the plain projection bit-exactly") {
        for (int trial = 0; trial < 100; ++trial) {
            const auto img = oracle::random_bitmap(rng, 12);
            const auto plain = col_projection(img);
            const auto enhanced = enhanced_col_projection(img, 0.0);
            REQUIRE(plain.size() == enhanced.size());
            for (std::size_t i = 0; i < plain.size(); ++i)
                CHECK(enhanced[i] == static_cast<double>(plain[i]));
        }
    }
    SUBCASE("hand evaluation of the weighting") {
        BinaryImage img(1, 2, 1);  // both pixels ink
        const auto p = enhanced_col_projection(img, 1.0);
        REQUIRE(p.size() == 1);
        CHECK(p[0] == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("ink low in the image scores higher than equal ink high up") {
        // Column 0: ink at the top; column 1: same count at the bottom.
        const auto img = oracle::bitmap({
            "#.",
            "#.",
            "..",
            ".#",
            ".#",
        });
        const auto p = enhanced_col_projection(img, 1.0);
        CHECK(p[1] > p[0]);
    }
    SUBCASE("rejects negative penalty") {
        BinaryImage img(1, 1, 1);
        CHECK_THROWS_AS(enhanced_col_projection(img, -0.5), std::invalid_argument);
    }
}

TEST_CASE("crop behaviour") {
    const auto img = oracle::bitmap({
        ".....",
        ".##..",
        ".....",
        "...#.",
    });
    SUBCASE("identity crop") {
        CHECK(crop(img, Rect{0, 0, 5, 4}) == img);
    }
    SUBCASE("blank region") {
        const auto sub = crop(img, Rect{0, 2, 3, 1});
        CHECK(sub.width == 3);
        CHECK(sub.height == 1);
        CHECK(sub.ink_count() == 0);
    }
    SUBCASE("tight crop shrinks to a single ink pixel") {
        const auto [sub, r] = tight_crop(img, Rect{2, 2, 3, 2});
        CHECK(r == Rect{3, 3, 1, 1});
        CHECK(sub.width == 1);
        CHECK(sub.height == 1);
        CHECK(sub.ink(0, 0));
    }
    SUBCASE("out of bounds") {
        CHECK_THROWS_AS(crop(img, Rect{3, 0, 5, 1}), std::out_of_range);
        CHECK_THROWS_AS(crop(img, Rect{0, 0, 0, 1}), std::out_of_range);
    }
    SUBCASE("composed crops equal one crop of the composition") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const auto base = oracle::random_bitmap(rng, 12);
            auto rint = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
            if (base.width < 2 || base.height < 2) continue;
            const int x0 = rint(0, base.width - 2), y0 = rint(0, base.height - 2);
            const Rect outer{x0, y0, rint(1, base.width - x0), rint(1, base.height - y0)};
            const Rect inner{rint(0, outer.w - 1), rint(0, outer.h - 1), 1, 1};
            const Rect composed{outer.x + inner.x, outer.y + inner.y, inner.w, inner.h};
            CHECK(crop(crop(base, outer), inner) == crop(base, composed));
        }
    }
}
