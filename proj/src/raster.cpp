#include "voltage/raster.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace voltage {

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
}

bool GrayImage::valid() const {
    return width >= 1 && height >= 1 &&
           data.size() == static_cast<std::size_t>(width) * height;
}

BinaryImage::BinaryImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("BinaryImage: dimensions must be >= 1");
}

long BinaryImage::ink_count() const {
    return std::accumulate(data.begin(), data.end(), 0L,
                           [](long acc, std::uint8_t v) { return acc + (v != 0); });
}

bool BinaryImage::valid() const {
    return width >= 1 && height >= 1 &&
           data.size() == static_cast<std::size_t>(width) * height;
}

int otsu_threshold(const GrayImage& img) {
    if (!img.valid()) throw std::invalid_argument("otsu_threshold: invalid image");
    std::array<long, 256> hist{};
    for (std::uint8_t v : img.data) hist[v]++;

    const long total = static_cast<long>(img.data.size());
    double sum_all = 0.0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    long w0 = 0;
    double sum0 = 0.0;
    double best_var = -1.0;
    int best_t = 0;
    // Candidate cut t: ink = {p < t}.
    for (int t = 1; t <= 255; ++t) {
        w0 += hist[t - 1];
        sum0 += static_cast<double>(t - 1) * hist[t - 1];
        const long w1 = total - w0;
        if (w0 == 0 || w1 == 0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double var = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;  // 0 when the image has no intensity variation
}

BinaryImage binarize(const GrayImage& img, std::optional<int> threshold) {
    if (!img.valid()) throw std::invalid_argument("binarize: invalid image");
    const int t = threshold ? *threshold : otsu_threshold(img);
    BinaryImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] < t ? 1 : 0;
    return out;
}

GrayImage to_gray(const BinaryImage& img) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] ? 0 : 255;
    return out;
}

std::vector<long> row_projection(const BinaryImage& img) {
    std::vector<long> counts(img.height, 0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.ink(x, y)) counts[y]++;
    return counts;
}

std::vector<long> col_projection(const BinaryImage& img) {
    std::vector<long> counts(img.width, 0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.ink(x, y)) counts[x]++;
    return counts;
}

std::vector<double> enhanced_col_projection(const BinaryImage& img, double penalty_weight) {
    if (penalty_weight < 0) throw std::invalid_argument("enhanced_col_projection: penalty_weight must be >= 0");
    std::vector<double> profile(img.width, 0.0);
    const double h = static_cast<double>(img.height);
    for (int y = 0; y < img.height; ++y) {
        const double w = 1.0 + penalty_weight * static_cast<double>(y) / h;
        for (int x = 0; x < img.width; ++x)
            if (img.ink(x, y)) profile[x] += w;
    }
    return profile;
}

namespace {

void check_rect(int width, int height, const Rect& r, const char* who) {
    if (r.w < 1 || r.h < 1 || r.x < 0 || r.y < 0 || r.x + r.w > width || r.y + r.h > height)
        throw std::out_of_range(std::string(who) + ": rectangle out of bounds");
}

}  // namespace

BinaryImage crop(const BinaryImage& img, const Rect& r) {
    check_rect(img.width, img.height, r, "crop");
    BinaryImage out(r.w, r.h);
    for (int y = 0; y < r.h; ++y)
        for (int x = 0; x < r.w; ++x)
            out.data[static_cast<std::size_t>(y) * r.w + x] = img.data[static_cast<std::size_t>(y + r.y) * img.width + (x + r.x)];
    return out;
}

GrayImage crop(const GrayImage& img, const Rect& r) {
    check_rect(img.width, img.height, r, "crop");
    GrayImage out(r.w, r.h);
    for (int y = 0; y < r.h; ++y)
        for (int x = 0; x < r.w; ++x)
            out.data[static_cast<std::size_t>(y) * r.w + x] = img.data[static_cast<std::size_t>(y + r.y) * img.width + (x + r.x)];
    return out;
}

std::optional<Rect> ink_bounds(const BinaryImage& img) {
    int min_x = img.width, min_y = img.height, max_x = -1, max_y = -1;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.ink(x, y)) {
                min_x = std::min(min_x, x);
                min_y = std::min(min_y, y);
                max_x = std::max(max_x, x);
                max_y = std::max(max_y, y);
            }
    if (max_x < 0) return std::nullopt;
    return Rect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
}

std::pair<BinaryImage, Rect> tight_crop(const BinaryImage& img, const Rect& r) {
    check_rect(img.width, img.height, r, "tight_crop");
    const BinaryImage sub = crop(img, r);
    const auto bounds = ink_bounds(sub);
    if (!bounds) return {sub, r};  // blank region: nothing to shrink to
    Rect shrunk{r.x + bounds->x, r.y + bounds->y, bounds->w, bounds->h};
    return {crop(img, shrunk), shrunk};
}

}  // namespace voltage
