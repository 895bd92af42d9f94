#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voltage/raster.hpp"

namespace voltage {

enum class Zone { Upper, Middle, Bottom };

enum class ScriptClass { Abugida, Alphabet };

const char* zone_name(Zone z);
Zone zone_from_name(const std::string& name);

// One text line of a page. Row ranges are half-open: the line occupies
// rows [y_start, y_end) and the middle zone occupies
// [upper_boundary, lower_boundary).
struct LineBand {
    int y_start = 0;
    int y_end = 0;
    int upper_boundary = 0;
    int lower_boundary = 0;
};

struct Provenance {
    int page = 0;
    int line = 0;
    int word = 0;
    int chr = 0;
    int symbol = 0;

    bool operator==(const Provenance&) const = default;
};

// A zoned sub-character unit: the atomic recognition target.
struct SymbolRecord {
    BinaryImage image;  // tight-cropped, this component's ink only
    Zone zone = Zone::Middle;
    Rect box;           // page coordinates
    Provenance prov;
    std::string label;  // empty until annotated
};

struct SegmentationConfig {
    double valley_threshold_fraction = 0.10;  // of the profile maximum
    int min_gap_px = 1;                       // run length for find_valleys
    double penalty_weight = 1.0;              // enhanced column profile
    ScriptClass script_class = ScriptClass::Abugida;
    double word_gap_fraction = 0.5;   // of median line height
    double char_gap_fraction = 0.1;   // of median line height
    double middle_band_mass = 0.70;   // ink mass captured by the middle zone band
    int min_symbol_pixels = 1;        // components below this are discarded as specks
};

// A maximal low-profile run [begin, end) with its cut position (midpoint,
// ties floor).
struct CutInterval {
    int begin = 0;
    int end = 0;
    int cut = 0;

    bool operator==(const CutInterval&) const = default;
};

// Maximal runs of profile values <= valley_threshold_fraction * max(profile),
// at least min_gap_px long.
std::vector<CutInterval> find_valleys(std::span<const double> profile, const SegmentationConfig& cfg);
std::vector<CutInterval> find_valleys(std::span<const long> profile, const SegmentationConfig& cfg);

// Content intervals (half-open) between valleys.
std::vector<std::pair<int, int>> segment_intervals(std::span<const double> profile,
                                                   const SegmentationConfig& cfg);

// Lines via row-projection valleys, top to bottom, each with its middle-zone
// band (smallest row window holding cfg.middle_band_mass of the line's ink).
std::vector<LineBand> segment_lines(const BinaryImage& page, const SegmentationConfig& cfg);

// Words via column-projection valleys of a line image, left to right.
// min_gap derives from word_gap_fraction * line_height_px (>=1).
std::vector<Rect> segment_words(const BinaryImage& line, const SegmentationConfig& cfg,
                                int line_height_px);

// Characters of a word image. Abugida scripts cut on the enhanced column
// profile, alphabets on the plain one.
std::vector<Rect> segment_characters(const BinaryImage& word, const SegmentationConfig& cfg,
                                     int line_height_px);

// Zhang-Suen iterative thinning to a fixpoint. Components that the
// iteration would erase entirely keep one representative pixel so the
// component count is preserved.
BinaryImage skeletonize(const BinaryImage& img);

struct Component {
    Rect box;
    std::vector<std::pair<int, int>> pixels;  // (x, y)
};

// 8-connected components, ordered by first pixel in row-major scan.
std::vector<Component> connected_components(const BinaryImage& img);

// Optional script-specific override: return a zone to force, or nullopt to
// accept the centroid rule. Ships empty (never installed) for the synthetic
// script.
using ZoneExceptionHook =
    std::function<std::optional<Zone>(const Component&, const LineBand&)>;

// Splits a character image into zoned symbols, one per connected component.
// char_box locates char_img on the page; band boundaries are absolute rows.
// Alphabet scripts yield a single middle-zone symbol.
std::vector<SymbolRecord> classify_zones(const BinaryImage& char_img, const Rect& char_box,
                                         const LineBand& band, const SegmentationConfig& cfg,
                                         const ZoneExceptionHook& hook = nullptr);

// Full page decomposition with provenance. Symbol indices restart per
// character; records come out in reading order.
std::vector<SymbolRecord> extract_symbols(const BinaryImage& page, const SegmentationConfig& cfg,
                                          int page_index = 0);

// Word boxes per line as produced during extract_symbols (page coordinates).
struct PageLayout {
    std::vector<LineBand> lines;
    std::vector<std::vector<Rect>> words;       // [line][word]
    std::vector<std::vector<std::vector<Rect>>> chars;  // [line][word][char]
};

PageLayout analyze_page(const BinaryImage& page, const SegmentationConfig& cfg);

}  // namespace voltage
