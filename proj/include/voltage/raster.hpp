#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace voltage {

// 8-bit grayscale raster, row-major, origin at top-left.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    bool valid() const;
};

// Bit raster where 1 = ink, 0 = background. Every downstream algorithm
// assumes this polarity regardless of the source document.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 0/1

    BinaryImage() = default;
    BinaryImage(int w, int h, std::uint8_t fill = 0);

    bool ink(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    long ink_count() const;
    bool blank() const { return ink_count() == 0; }
    bool valid() const;

    bool operator==(const BinaryImage&) const = default;
};

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool operator==(const Rect&) const = default;
    bool contains(int px, int py) const { return px >= x && px < x + w && py >= y && py < y + h; }
};

// Otsu threshold selection when none is given. Ink = intensity strictly
// below the threshold (dark-on-light documents). A uniform image yields
// an all-background result.
BinaryImage binarize(const GrayImage& img, std::optional<int> threshold = std::nullopt);

// Exhaustive between-class-variance sweep; returns the chosen cut so that
// ink = {p : p < t}. Returns 0 for images with no intensity variation.
int otsu_threshold(const GrayImage& img);

// Renders a binary image back to gray (ink -> 0, background -> 255).
GrayImage to_gray(const BinaryImage& img);

// counts[i] = ink pixels in row i.
std::vector<long> row_projection(const BinaryImage& img);

// counts[i] = ink pixels in column i.
std::vector<long> col_projection(const BinaryImage& img);

// Column profile where each ink pixel contributes 1 + penalty_weight * y/height,
// so strokes lower in the image weigh more. With penalty_weight 0 this equals
// col_projection exactly.
std::vector<double> enhanced_col_projection(const BinaryImage& img, double penalty_weight);

BinaryImage crop(const BinaryImage& img, const Rect& r);
GrayImage crop(const GrayImage& img, const Rect& r);

// Smallest rectangle covering all ink, or nullopt for a blank image.
std::optional<Rect> ink_bounds(const BinaryImage& img);

// Shrinks r to the minimal ink bounding box inside it before cropping.
// Returns the cropped image and the shrunk rectangle (in img coordinates).
std::pair<BinaryImage, Rect> tight_crop(const BinaryImage& img, const Rect& r);

}  // namespace voltage
