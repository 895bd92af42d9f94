#include "voltage/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace voltage {

const char* zone_name(Zone z) {
    switch (z) {
        case Zone::Upper: return "upper";
        case Zone::Middle: return "middle";
        case Zone::Bottom: return "bottom";
    }
    return "middle";
}

Zone zone_from_name(const std::string& name) {
    if (name == "upper") return Zone::Upper;
    if (name == "middle") return Zone::Middle;
    if (name == "bottom") return Zone::Bottom;
    throw std::invalid_argument("unknown zone name: " + name);
}

std::vector<CutInterval> find_valleys(std::span<const double> profile, const SegmentationConfig& cfg) {
    if (profile.empty()) throw std::invalid_argument("find_valleys: empty profile");
    const double maxv = *std::max_element(profile.begin(), profile.end());
    const double threshold = cfg.valley_threshold_fraction * maxv;
    const int min_len = std::max(1, cfg.min_gap_px);

    std::vector<CutInterval> valleys;
    int run_start = -1;
    const int n = static_cast<int>(profile.size());
    for (int i = 0; i <= n; ++i) {
        const bool low = i < n && profile[i] <= threshold;
        if (low && run_start < 0) run_start = i;
        if (!low && run_start >= 0) {
            const int len = i - run_start;
            if (len >= min_len) valleys.push_back({run_start, i, (run_start + i - 1) / 2});
            run_start = -1;
        }
    }
    return valleys;
}

std::vector<CutInterval> find_valleys(std::span<const long> profile, const SegmentationConfig& cfg) {
    std::vector<double> p(profile.begin(), profile.end());
    return find_valleys(std::span<const double>(p), cfg);
}

std::vector<std::pair<int, int>> segment_intervals(std::span<const double> profile,
                                                   const SegmentationConfig& cfg) {
    const auto valleys = find_valleys(profile, cfg);
    std::vector<std::pair<int, int>> segments;
    int pos = 0;
    const int n = static_cast<int>(profile.size());
    for (const auto& v : valleys) {
        if (v.begin > pos) segments.emplace_back(pos, v.begin);
        pos = v.end;
    }
    if (pos < n) segments.emplace_back(pos, n);
    // Segments that are entirely below threshold can only arise when no
    // valley was found at all; a blank profile yields one full-width valley
    // and therefore no segments.
    return segments;
}

namespace {

std::vector<std::pair<int, int>> intervals_of(const std::vector<long>& counts,
                                              const SegmentationConfig& cfg, int min_gap) {
    std::vector<double> p(counts.begin(), counts.end());
    SegmentationConfig c = cfg;
    c.min_gap_px = min_gap;
    return segment_intervals(std::span<const double>(p), c);
}

// Smallest row window [a, b] holding at least `mass_fraction` of the total,
// ties to the topmost window.
std::pair<int, int> min_mass_window(const std::vector<long>& rows, double mass_fraction) {
    const long total = std::accumulate(rows.begin(), rows.end(), 0L);
    const int n = static_cast<int>(rows.size());
    if (total == 0) return {0, n - 1};
    const double need = mass_fraction * static_cast<double>(total);
    int best_a = 0, best_b = n - 1;
    long sum = 0;
    int a = 0;
    for (int b = 0; b < n; ++b) {
        sum += rows[b];
        while (sum - rows[a] >= need) sum -= rows[a++];
        if (static_cast<double>(sum) >= need && (b - a) < (best_b - best_a)) {
            best_a = a;
            best_b = b;
        }
    }
    return {best_a, best_b};
}

}  // namespace

std::vector<LineBand> segment_lines(const BinaryImage& page, const SegmentationConfig& cfg) {
    const auto rows = row_projection(page);
    const auto line_ivals = intervals_of(rows, cfg, std::max(1, cfg.min_gap_px));

    std::vector<LineBand> bands;
    bands.reserve(line_ivals.size());
    for (const auto& [y0, y1] : line_ivals) {
        std::vector<long> line_rows(rows.begin() + y0, rows.begin() + y1);
        const auto [a, b] = min_mass_window(line_rows, cfg.middle_band_mass);
        LineBand band;
        band.y_start = y0;
        band.y_end = y1;
        band.upper_boundary = y0 + a;
        band.lower_boundary = y0 + b + 1;
        bands.push_back(band);
    }
    return bands;
}

std::vector<Rect> segment_words(const BinaryImage& line, const SegmentationConfig& cfg,
                                int line_height_px) {
    const int gap = std::max(1, static_cast<int>(std::lround(cfg.word_gap_fraction * line_height_px)));
    const auto ivals = intervals_of(col_projection(line), cfg, gap);
    std::vector<Rect> words;
    words.reserve(ivals.size());
    for (const auto& [x0, x1] : ivals) words.push_back({x0, 0, x1 - x0, line.height});
    return words;
}

std::vector<Rect> segment_characters(const BinaryImage& word, const SegmentationConfig& cfg,
                                     int line_height_px) {
    const int gap = std::max(1, static_cast<int>(std::lround(cfg.char_gap_fraction * line_height_px)));
    SegmentationConfig c = cfg;
    c.min_gap_px = gap;

    std::vector<std::pair<int, int>> ivals;
    if (cfg.script_class == ScriptClass::Abugida) {
        const auto profile = enhanced_col_projection(word, cfg.penalty_weight);
        ivals = segment_intervals(std::span<const double>(profile), c);
    } else {
        const auto counts = col_projection(word);
        std::vector<double> p(counts.begin(), counts.end());
        ivals = segment_intervals(std::span<const double>(p), c);
    }

    std::vector<Rect> chars;
    chars.reserve(ivals.size());
    for (const auto& [x0, x1] : ivals) chars.push_back({x0, 0, x1 - x0, word.height});
    return chars;
}

namespace {

int count_neighbors(const BinaryImage& img, int x, int y) {
    int n = 0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (img.in_bounds(x + dx, y + dy) && img.ink(x + dx, y + dy)) n++;
        }
    return n;
}

// p2..p9 clockwise from north.
void neighborhood(const BinaryImage& img, int x, int y, int p[8]) {
    static constexpr int DX[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    static constexpr int DY[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    for (int i = 0; i < 8; ++i) {
        const int nx = x + DX[i], ny = y + DY[i];
        p[i] = img.in_bounds(nx, ny) && img.ink(nx, ny) ? 1 : 0;
    }
}

bool zhang_suen_removable(const BinaryImage& img, int x, int y, bool second_pass) {
    int p[8];
    neighborhood(img, x, y, p);
    const int b = p[0] + p[1] + p[2] + p[3] + p[4] + p[5] + p[6] + p[7];
    if (b < 2 || b > 6) return false;
    int a = 0;
    for (int i = 0; i < 8; ++i)
        if (p[i] == 0 && p[(i + 1) % 8] == 1) a++;
    if (a != 1) return false;
    // p2=p[0] N, p4=p[2] E, p6=p[4] S, p8=p[6] W
    if (!second_pass) {
        if (p[0] * p[2] * p[4] != 0) return false;
        if (p[2] * p[4] * p[6] != 0) return false;
    } else {
        if (p[0] * p[2] * p[6] != 0) return false;
        if (p[0] * p[4] * p[6] != 0) return false;
    }
    return true;
}

}  // namespace

BinaryImage skeletonize(const BinaryImage& img) {
    BinaryImage out = img;
    std::vector<std::pair<int, int>> marked;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            marked.clear();
            for (int y = 0; y < out.height; ++y)
                for (int x = 0; x < out.width; ++x)
                    if (out.ink(x, y) && zhang_suen_removable(out, x, y, pass == 1))
                        marked.emplace_back(x, y);
            for (const auto& [x, y] : marked) out.set(x, y, false);
            if (!marked.empty()) changed = true;
        }
    }
    // The iteration can erase small blobs outright (a solid 2x2 block
    // vanishes). Restore one anchor pixel per lost component.
    for (const auto& comp : connected_components(img)) {
        bool survives = false;
        for (const auto& [x, y] : comp.pixels)
            if (out.ink(x, y)) {
                survives = true;
                break;
            }
        if (!survives) out.set(comp.pixels.front().first, comp.pixels.front().second, true);
    }
    return out;
}

std::vector<Component> connected_components(const BinaryImage& img) {
    const int w = img.width, h = img.height;
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<int> parent;

    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // First pass: provisional labels, merging across the four already-seen
    // 8-neighbors (W, NW, N, NE).
    static constexpr int DX[4] = {-1, -1, 0, 1};
    static constexpr int DY[4] = {0, -1, -1, -1};
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (!img.ink(x, y)) continue;
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            int assigned = -1;
            for (int k = 0; k < 4; ++k) {
                const int nx = x + DX[k], ny = y + DY[k];
                if (nx < 0 || nx >= w || ny < 0) continue;
                const int nl = label[static_cast<std::size_t>(ny) * w + nx];
                if (nl < 0) continue;
                if (assigned < 0)
                    assigned = nl;
                else
                    unite(assigned, nl);
            }
            if (assigned < 0) {
                assigned = static_cast<int>(parent.size());
                parent.push_back(assigned);
            }
            label[idx] = assigned;
        }

    // Second pass: resolve roots; component order = first pixel in row-major
    // scan, which makes extraction deterministic (top-most, then left-most).
    std::vector<int> order(parent.size(), -1);
    std::vector<Component> comps;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (label[idx] < 0) continue;
            const int root = find(label[idx]);
            if (order[root] < 0) {
                order[root] = static_cast<int>(comps.size());
                comps.push_back({Rect{x, y, 1, 1}, {}});
            }
            Component& c = comps[order[root]];
            c.pixels.emplace_back(x, y);
            c.box.x = std::min(c.box.x, x);
            c.box.y = std::min(c.box.y, y);
        }
    for (auto& c : comps) {
        int max_x = 0, max_y = 0;
        for (const auto& [x, y] : c.pixels) {
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
        c.box.w = max_x - c.box.x + 1;
        c.box.h = max_y - c.box.y + 1;
    }
    return comps;
}

std::vector<SymbolRecord> classify_zones(const BinaryImage& char_img, const Rect& char_box,
                                         const LineBand& band, const SegmentationConfig& cfg,
                                         const ZoneExceptionHook& hook) {
    std::vector<SymbolRecord> records;

    if (cfg.script_class == ScriptClass::Alphabet) {
        // Characters and symbols are analogous: one middle-zone symbol.
        const auto bounds = ink_bounds(char_img);
        if (!bounds) return records;
        SymbolRecord rec;
        rec.image = crop(char_img, *bounds);
        rec.zone = Zone::Middle;
        rec.box = Rect{char_box.x + bounds->x, char_box.y + bounds->y, bounds->w, bounds->h};
        records.push_back(std::move(rec));
        return records;
    }

    for (const auto& comp : connected_components(char_img)) {
        if (static_cast<int>(comp.pixels.size()) < cfg.min_symbol_pixels) continue;
        double centroid_row = 0.0;
        for (const auto& [x, y] : comp.pixels) centroid_row += y;
        centroid_row = centroid_row / static_cast<double>(comp.pixels.size()) + char_box.y;

        Zone zone = Zone::Middle;
        if (centroid_row < band.upper_boundary)
            zone = Zone::Upper;
        else if (centroid_row >= band.lower_boundary)
            zone = Zone::Bottom;
        if (hook) {
            if (auto forced = hook(comp, band)) zone = *forced;
        }

        BinaryImage sym(comp.box.w, comp.box.h);
        for (const auto& [x, y] : comp.pixels) sym.set(x - comp.box.x, y - comp.box.y, true);

        SymbolRecord rec;
        rec.image = std::move(sym);
        rec.zone = zone;
        rec.box = Rect{char_box.x + comp.box.x, char_box.y + comp.box.y, comp.box.w, comp.box.h};
        records.push_back(std::move(rec));
    }
    return records;
}

PageLayout analyze_page(const BinaryImage& page, const SegmentationConfig& cfg) {
    PageLayout layout;
    layout.lines = segment_lines(page, cfg);
    if (layout.lines.empty()) return layout;

    std::vector<int> heights;
    heights.reserve(layout.lines.size());
    for (const auto& b : layout.lines) heights.push_back(b.y_end - b.y_start);
    std::nth_element(heights.begin(), heights.begin() + heights.size() / 2, heights.end());
    const int median_h = heights[heights.size() / 2];

    for (const auto& band : layout.lines) {
        const Rect line_rect{0, band.y_start, page.width, band.y_end - band.y_start};
        const BinaryImage line_img = crop(page, line_rect);
        std::vector<Rect> words = segment_words(line_img, cfg, median_h);
        std::vector<std::vector<Rect>> word_chars;
        for (auto& wrect : words) {
            const BinaryImage word_img = crop(line_img, wrect);
            std::vector<Rect> chars = segment_characters(word_img, cfg, median_h);
            for (auto& crect : chars) {
                crect.x += wrect.x;  // line coordinates
                crect.y += wrect.y;
            }
            word_chars.push_back(std::move(chars));
            wrect.y += band.y_start;  // to page coordinates
        }
        for (auto& chars : word_chars)
            for (auto& crect : chars) crect.y += band.y_start;
        layout.words.push_back(std::move(words));
        layout.chars.push_back(std::move(word_chars));
    }
    return layout;
}

std::vector<SymbolRecord> extract_symbols(const BinaryImage& page, const SegmentationConfig& cfg,
                                          int page_index) {
    const PageLayout layout = analyze_page(page, cfg);
    std::vector<SymbolRecord> symbols;
    for (std::size_t li = 0; li < layout.lines.size(); ++li) {
        const LineBand& band = layout.lines[li];
        for (std::size_t wi = 0; wi < layout.words[li].size(); ++wi) {
            for (std::size_t ci = 0; ci < layout.chars[li][wi].size(); ++ci) {
                const Rect& char_box = layout.chars[li][wi][ci];
                const BinaryImage char_img = crop(page, char_box);
                auto records = classify_zones(char_img, char_box, band, cfg);
                for (std::size_t si = 0; si < records.size(); ++si) {
                    records[si].prov = Provenance{page_index, static_cast<int>(li),
                                                  static_cast<int>(wi), static_cast<int>(ci),
                                                  static_cast<int>(si)};
                    symbols.push_back(std::move(records[si]));
                }
            }
        }
    }
    return symbols;
}

}  // namespace voltage
