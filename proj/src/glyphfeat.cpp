#include "voltage/glyphfeat.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "voltage/segmentation.hpp"

namespace voltage {

FeatureKind feature_kind(FeatureId id) {
    switch (id) {
        case FeatureId::F1:
        case FeatureId::F4:
        case FeatureId::F5:
        case FeatureId::F13:
        case FeatureId::F14:
            return FeatureKind::Boolean;
        case FeatureId::F2:
        case FeatureId::F3:
        case FeatureId::F6:
        case FeatureId::F7:
        case FeatureId::F8:
        case FeatureId::F9:
        case FeatureId::F10:
        case FeatureId::F11:
        case FeatureId::F15:
        case FeatureId::F16:
        case FeatureId::F17:
            return FeatureKind::Count;
        default:
            return FeatureKind::Range;
    }
}

std::string feature_name(FeatureId id) { return "F" + std::to_string(static_cast<int>(id) + 1); }

FeatureId feature_from_name(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'F') {
        const int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= kFeatureCount) return static_cast<FeatureId>(n - 1);
    }
    throw std::invalid_argument("unknown feature name: " + name);
}

bool feature_in_range(FeatureId id, double value) {
    switch (feature_kind(id)) {
        case FeatureKind::Boolean: return value == 0.0 || value == 1.0;
        case FeatureKind::Count: return value >= 0.0 && value == std::floor(value);
        case FeatureKind::Range: return value >= 0.0 && value <= 100.0;
    }
    return false;
}

FeatureContext FeatureContext::from_raw(const BinaryImage& raw) {
    FeatureContext ctx;
    ctx.raw = raw;
    ctx.skeleton = skeletonize(raw);
    return ctx;
}

namespace {

// Longest consecutive ink run in row y.
int max_run_in_row(const BinaryImage& img, int y) {
    int best = 0, run = 0;
    for (int x = 0; x < img.width; ++x) {
        run = img.ink(x, y) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

int max_run_in_col(const BinaryImage& img, int x) {
    int best = 0, run = 0;
    for (int y = 0; y < img.height; ++y) {
        run = img.ink(x, y) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

int runs_in_row(const BinaryImage& img, int y) {
    int runs = 0;
    bool prev = false;
    for (int x = 0; x < img.width; ++x) {
        const bool cur = img.ink(x, y);
        if (cur && !prev) runs++;
        prev = cur;
    }
    return runs;
}

int runs_in_col(const BinaryImage& img, int x) {
    int runs = 0;
    bool prev = false;
    for (int y = 0; y < img.height; ++y) {
        const bool cur = img.ink(x, y);
        if (cur && !prev) runs++;
        prev = cur;
    }
    return runs;
}

// Rows in the top band whose longest ink run spans most of the width.
// Returns {first, last} headline rows or {-1, -1}.
std::pair<int, int> headline_rows(const FeatureContext& ctx) {
    const BinaryImage& img = ctx.raw;
    const int limit = std::max(1, static_cast<int>(std::ceil(ctx.headline_top_fraction * img.height)));
    const int need = static_cast<int>(std::ceil(ctx.headline_cover_fraction * img.width));
    int first = -1, last = -1;
    for (int y = 0; y < limit; ++y) {
        if (max_run_in_row(img, y) >= need) {
            if (first < 0) first = y;
            last = y;
        }
    }
    return {first, last};
}

bool has_sidebar(const FeatureContext& ctx, bool left) {
    const BinaryImage& img = ctx.raw;
    const int band = std::max(1, static_cast<int>(std::ceil(ctx.sidebar_side_fraction * img.width)));
    const int need = static_cast<int>(std::ceil(ctx.sidebar_cover_fraction * img.height));
    for (int i = 0; i < band; ++i) {
        const int x = left ? i : img.width - 1 - i;
        if (max_run_in_col(img, x) >= need) return true;
    }
    return false;
}

// Background components (4-connected) not reachable from the border: the
// topological holes. Returns one representative pixel set per hole.
std::vector<std::vector<std::pair<int, int>>> hole_components(const BinaryImage& img) {
    const int w = img.width, h = img.height;
    std::vector<int> mark(static_cast<std::size_t>(w) * h, 0);  // 0 unvisited, 1 border-bg, 2 hole
    std::deque<std::pair<int, int>> queue;
    auto push_bg = [&](int x, int y) {
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        if (!img.ink(x, y) && mark[i] == 0) {
            mark[i] = 1;
            queue.emplace_back(x, y);
        }
    };
    for (int x = 0; x < w; ++x) {
        push_bg(x, 0);
        push_bg(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        push_bg(0, y);
        push_bg(w - 1, y);
    }
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        if (x > 0) push_bg(x - 1, y);
        if (x < w - 1) push_bg(x + 1, y);
        if (y > 0) push_bg(x, y - 1);
        if (y < h - 1) push_bg(x, y + 1);
    }

    std::vector<std::vector<std::pair<int, int>>> holes;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (img.ink(x, y) || mark[i] != 0) continue;
            holes.emplace_back();
            auto& hole = holes.back();
            mark[i] = 2;
            std::deque<std::pair<int, int>> q{{x, y}};
            while (!q.empty()) {
                const auto [cx, cy] = q.front();
                q.pop_front();
                hole.emplace_back(cx, cy);
                static constexpr int DX[4] = {1, -1, 0, 0};
                static constexpr int DY[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nx = cx + DX[k], ny = cy + DY[k];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
                    if (!img.ink(nx, ny) && mark[ni] == 0) {
                        mark[ni] = 2;
                        q.emplace_back(nx, ny);
                    }
                }
            }
        }
    return holes;
}

int skeleton_neighbor_count(const BinaryImage& sk, int x, int y) {
    int n = 0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (sk.in_bounds(x + dx, y + dy) && sk.ink(x + dx, y + dy)) n++;
        }
    return n;
}

// 90-degree turns at skeleton path pixels (exactly two neighbors). The
// orientation sign uses the neighbors in row-major order, which is a fixed
// local convention rather than a traversal of the whole curve.
std::pair<int, int> bend_points(const BinaryImage& sk) {
    int cw = 0, ccw = 0;
    for (int y = 0; y < sk.height; ++y)
        for (int x = 0; x < sk.width; ++x) {
            if (!sk.ink(x, y)) continue;
            std::pair<int, int> nb[2];
            int count = 0;
            for (int dy = -1; dy <= 1 && count <= 2; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    if (sk.in_bounds(x + dx, y + dy) && sk.ink(x + dx, y + dy)) {
                        if (count < 2) nb[count] = {dx, dy};
                        count++;
                    }
                }
            if (count != 2) continue;
            const auto [ax, ay] = nb[0];
            const auto [bx, by] = nb[1];
            if (ax * bx + ay * by != 0) continue;  // not a right angle
            const int cross = ax * by - ay * bx;
            if (cross > 0)
                cw++;
            else if (cross < 0)
                ccw++;
        }
    return {cw, ccw};
}

double jaccard(const BinaryImage& a, const BinaryImage& b) {
    long inter = 0, uni = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const bool pa = a.data[i] != 0, pb = b.data[i] != 0;
        if (pa && pb) inter++;
        if (pa || pb) uni++;
    }
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

BinaryImage mirror_lr(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out.set(img.width - 1 - x, y, img.ink(x, y));
    return out;
}

BinaryImage mirror_td(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out.set(x, img.height - 1 - y, img.ink(x, y));
    return out;
}

// Profile depth of one row/column: background pixels before the first ink
// seen from the given side, or the full extent when there is no ink.
int left_depth(const BinaryImage& img, int y) {
    for (int x = 0; x < img.width; ++x)
        if (img.ink(x, y)) return x;
    return img.width;
}
int right_depth(const BinaryImage& img, int y) {
    for (int x = img.width - 1; x >= 0; --x)
        if (img.ink(x, y)) return img.width - 1 - x;
    return img.width;
}
int top_depth(const BinaryImage& img, int x) {
    for (int y = 0; y < img.height; ++y)
        if (img.ink(x, y)) return y;
    return img.height;
}
int bottom_depth(const BinaryImage& img, int x) {
    for (int y = img.height - 1; y >= 0; --y)
        if (img.ink(x, y)) return img.height - 1 - y;
    return img.height;
}

template <typename DepthFn>
std::pair<double, double> profile_depth_range(const BinaryImage& img, int n, int extent, DepthFn fn) {
    int min_d = extent, max_d = 0;
    for (int i = 0; i < n; ++i) {
        const int d = fn(img, i);
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
    }
    const double scale = 100.0 / static_cast<double>(extent);
    return {min_d * scale, max_d * scale};
}

std::pair<double, double> centroid(const BinaryImage& img) {
    double sx = 0, sy = 0;
    long n = 0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.ink(x, y)) {
                sx += x;
                sy += y;
                n++;
            }
    if (n == 0) return {0.0, 0.0};
    return {sx / n, sy / n};
}

// Maps a centroid offset from the box midpoint to 0..100 (50 = centered).
double epicenter_scale(double coord, int extent) {
    const double mid = (extent - 1) / 2.0;
    const double half = extent / 2.0;
    const double v = 50.0 + 50.0 * (coord - mid) / half;
    return std::clamp(v, 0.0, 100.0);
}

}  // namespace

double compute_feature(FeatureId id, const FeatureContext& ctx) {
    const BinaryImage& raw = ctx.raw;
    const BinaryImage& sk = ctx.skeleton;
    const int w = raw.width, h = raw.height;

    switch (id) {
        case FeatureId::F1:
            return headline_rows(ctx).first >= 0 ? 1.0 : 0.0;
        case FeatureId::F2:
            return static_cast<double>(hole_components(raw).size());
        case FeatureId::F3: {
            const auto [first, last] = headline_rows(ctx);
            if (first < 0) return 0.0;
            int n = 0;
            for (const auto& hole : hole_components(raw)) {
                int top = raw.height;
                for (const auto& [hx, hy] : hole) top = std::min(top, hy);
                if (top <= last + 1) n++;
            }
            return static_cast<double>(n);
        }
        case FeatureId::F4:
            return has_sidebar(ctx, true) ? 1.0 : 0.0;
        case FeatureId::F5:
            return has_sidebar(ctx, false) ? 1.0 : 0.0;
        case FeatureId::F6:
            return static_cast<double>(connected_components(raw).size());
        case FeatureId::F7: {
            int n = 0;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    if (sk.ink(x, y) && skeleton_neighbor_count(sk, x, y) == 1) n++;
            return static_cast<double>(n);
        }
        case FeatureId::F8: {
            int n = 0;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    if (sk.ink(x, y) && skeleton_neighbor_count(sk, x, y) > 2) n++;
            return static_cast<double>(n);
        }
        case FeatureId::F9: {
            const auto [first, last] = headline_rows(ctx);
            if (first < 0) return 0.0;
            int n = 0;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    if (sk.ink(x, y) && skeleton_neighbor_count(sk, x, y) > 2 &&
                        y >= first - 1 && y <= last + 1)
                        n++;
            return static_cast<double>(n);
        }
        case FeatureId::F10:
            return static_cast<double>(bend_points(sk).first);
        case FeatureId::F11:
            return static_cast<double>(bend_points(sk).second);
        case FeatureId::F12:
            return 100.0 * static_cast<double>(std::min(w, h)) / static_cast<double>(std::max(w, h));
        case FeatureId::F13:
            return jaccard(raw, mirror_lr(raw)) >= ctx.symmetry_threshold ? 1.0 : 0.0;
        case FeatureId::F14:
            return jaccard(raw, mirror_td(raw)) >= ctx.symmetry_threshold ? 1.0 : 0.0;
        case FeatureId::F15: {
            int n = 0;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    if (sk.ink(x, y) && skeleton_neighbor_count(sk, x, y) == 0) n++;
            return static_cast<double>(n);
        }
        case FeatureId::F16: {
            int best = 0;
            for (int y = 0; y < h; ++y) best = std::max(best, runs_in_row(raw, y));
            return static_cast<double>(best);
        }
        case FeatureId::F17: {
            int best = 0;
            for (int x = 0; x < w; ++x) best = std::max(best, runs_in_col(raw, x));
            return static_cast<double>(best);
        }
        case FeatureId::F18: {
            const auto cols = col_projection(raw);
            return 100.0 * static_cast<double>(*std::min_element(cols.begin(), cols.end())) / h;
        }
        case FeatureId::F19: {
            const auto rows = row_projection(raw);
            return 100.0 * static_cast<double>(*std::min_element(rows.begin(), rows.end())) / w;
        }
        case FeatureId::F20: {
            const auto cols = col_projection(raw);
            return 100.0 * static_cast<double>(*std::max_element(cols.begin(), cols.end())) / h;
        }
        case FeatureId::F21: {
            const auto rows = row_projection(raw);
            return 100.0 * static_cast<double>(*std::max_element(rows.begin(), rows.end())) / w;
        }
        case FeatureId::F22:
            return profile_depth_range(raw, h, w, left_depth).second;
        case FeatureId::F23:
            return profile_depth_range(raw, h, w, right_depth).second;
        case FeatureId::F24:
            return profile_depth_range(raw, w, h, top_depth).second;
        case FeatureId::F25:
            return profile_depth_range(raw, w, h, bottom_depth).second;
        case FeatureId::F26:
            return profile_depth_range(raw, h, w, left_depth).first;
        case FeatureId::F27:
            return profile_depth_range(raw, h, w, right_depth).first;
        case FeatureId::F28:
            return profile_depth_range(raw, w, h, top_depth).first;
        case FeatureId::F29:
            return profile_depth_range(raw, w, h, bottom_depth).first;
        case FeatureId::F30:
            return 100.0 * static_cast<double>(raw.ink_count()) / (static_cast<double>(w) * h);
        case FeatureId::F31:
            return epicenter_scale(centroid(raw).second, h);
        case FeatureId::F32:
            return epicenter_scale(centroid(raw).first, w);
    }
    throw std::invalid_argument("compute_feature: unknown feature id");
}

FeatureVector compute_feature_vector(const FeatureContext& ctx) {
    FeatureVector v;
    for (int i = 0; i < kFeatureCount; ++i)
        v.values[i] = compute_feature(static_cast<FeatureId>(i), ctx);
    return v;
}

}  // namespace voltage
