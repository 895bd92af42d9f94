// Test-only reference implementations, kept deliberately independent of the
// library code paths they check.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "voltage/raster.hpp"

namespace oracle {

// Builds a bitmap from rows of '.' (background) and '#' (ink).
inline voltage::BinaryImage bitmap(const std::vector<std::string>& rows) {
    voltage::BinaryImage img(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            img.set(x, y, rows[y][x] == '#');
    return img;
}

inline voltage::BinaryImage random_bitmap(std::mt19937_64& rng, int max_side, double ink_prob = 0.4) {
    std::uniform_int_distribution<int> side(1, max_side);
    const int w = side(rng), h = side(rng);
    voltage::BinaryImage img(w, h);
    std::bernoulli_distribution ink(ink_prob);
    for (auto& v : img.data) v = ink(rng) ? 1 : 0;
    return img;
}

inline long ink_total(const voltage::BinaryImage& img) {
    long n = 0;
    for (auto v : img.data) n += v != 0;
    return n;
}

inline std::vector<long> row_counts(const voltage::BinaryImage& img) {
    std::vector<long> out(img.height, 0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out[y] += img.ink(x, y);
    return out;
}

inline std::vector<long> col_counts(const voltage::BinaryImage& img) {
    std::vector<long> out(img.width, 0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out[x] += img.ink(x, y);
    return out;
}

// Recursive flood fill component count, 8-connectivity.
inline int flood_fill_components(const voltage::BinaryImage& img) {
    std::vector<char> seen(img.data.size(), 0);
    std::function<void(int, int)> fill = [&](int x, int y) {
        if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
        const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
        if (seen[i] || !img.ink(x, y)) return;
        seen[i] = 1;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) fill(x + dx, y + dy);
    };
    int n = 0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
            if (img.ink(x, y) && !seen[i]) {
                n++;
                fill(x, y);
            }
        }
    return n;
}

// Holes: background regions (4-connectivity) that never touch the border.
inline int flood_fill_holes(const voltage::BinaryImage& img) {
    std::vector<char> seen(img.data.size(), 0);
    std::function<void(int, int)> fill = [&](int x, int y) {
        if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
        const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
        if (seen[i] || img.ink(x, y)) return;
        seen[i] = 1;
        fill(x - 1, y);
        fill(x + 1, y);
        fill(x, y - 1);
        fill(x, y + 1);
    };
    for (int x = 0; x < img.width; ++x) {
        fill(x, 0);
        fill(x, img.height - 1);
    }
    for (int y = 0; y < img.height; ++y) {
        fill(0, y);
        fill(img.width - 1, y);
    }
    int holes = 0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
            if (!img.ink(x, y) && !seen[i]) {
                holes++;
                fill(x, y);
            }
        }
    return holes;
}

// Brute 3x3 neighbor classifier over every ink pixel of the bitmap:
// returns (endpoints, junctions, isolated).
struct NeighborhoodCensus {
    int endpoints = 0;
    int junctions = 0;
    int isolated = 0;
};

inline NeighborhoodCensus neighborhood_census(const voltage::BinaryImage& img) {
    NeighborhoodCensus c;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            if (!img.ink(x, y)) continue;
            int n = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = x + dx, ny = y + dy;
                    if (nx >= 0 && nx < img.width && ny >= 0 && ny < img.height && img.ink(nx, ny)) n++;
                }
            if (n == 0) c.isolated++;
            if (n == 1) c.endpoints++;
            if (n > 2) c.junctions++;
        }
    return c;
}

inline int max_stroke_width(const voltage::BinaryImage& img) {
    int best = 0;
    for (int y = 0; y < img.height; ++y) {
        int run = 0;
        for (int x = 0; x < img.width; ++x) {
            run = img.ink(x, y) ? run + 1 : 0;
            best = std::max(best, run);
        }
    }
    for (int x = 0; x < img.width; ++x) {
        int run = 0;
        for (int y = 0; y < img.height; ++y) {
            run = img.ink(x, y) ? run + 1 : 0;
            best = std::max(best, run);
        }
    }
    return best;
}

}  // namespace oracle
