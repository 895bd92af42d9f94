#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "voltage/raster.hpp"

namespace voltage {

// The 32-slot glyph feature inventory. Booleans are stored 0/1, counts as
// nonnegative integers, ranged features on a 0..100 scale.
enum class FeatureId : int {
    F1 = 0,   // headline present
    F2,       // loops
    F3,       // loops touching the headline
    F4,       // left sidebar present
    F5,       // right sidebar present
    F6,       // connected components
    F7,       // endpoints (skeleton)
    F8,       // junctions (skeleton)
    F9,       // junctions touching the headline
    F10,      // clockwise bend points
    F11,      // anticlockwise bend points
    F12,      // aspect ratio, 0-100
    F13,      // horizontal symmetry (left-right mirror)
    F14,      // vertical symmetry (top-down mirror)
    F15,      // dots (isolated skeleton pixels)
    F16,      // max ink runs over rows
    F17,      // max ink runs over columns
    F18,      // min column projection / height * 100
    F19,      // min row projection / width * 100
    F20,      // max column projection / height * 100
    F21,      // max row projection / width * 100
    F22,      // max left profile depth
    F23,      // max right profile depth
    F24,      // max top profile depth
    F25,      // max bottom profile depth
    F26,      // min left profile depth
    F27,      // min right profile depth
    F28,      // min top profile depth
    F29,      // min bottom profile depth
    F30,      // ink pixels / area * 100
    F31,      // ink centroid row offset, 0-100
    F32,      // ink centroid column offset, 0-100
};

inline constexpr int kFeatureCount = 32;

enum class FeatureKind { Boolean, Count, Range };

FeatureKind feature_kind(FeatureId id);
std::string feature_name(FeatureId id);  // "F1".."F32"
FeatureId feature_from_name(const std::string& name);

struct FeatureVector {
    std::array<double, kFeatureCount> values{};

    double operator[](FeatureId id) const { return values[static_cast<int>(id)]; }
    double& operator[](FeatureId id) { return values[static_cast<int>(id)]; }
    bool operator==(const FeatureVector&) const = default;
};

// Shared inputs for feature computation. raw is the tight-cropped symbol;
// skeleton its thinning. Threshold knobs default to the values used
// throughout the pipeline.
struct FeatureContext {
    BinaryImage raw;
    BinaryImage skeleton;
    double symmetry_threshold = 0.8;       // Jaccard overlap for F13/F14
    double headline_top_fraction = 0.25;   // rows eligible as headline
    double headline_cover_fraction = 0.8;  // ink run / width
    double sidebar_side_fraction = 0.15;   // columns eligible as sidebar
    double sidebar_cover_fraction = 0.8;   // ink run / height

    static FeatureContext from_raw(const BinaryImage& raw);
};

double compute_feature(FeatureId id, const FeatureContext& ctx);
FeatureVector compute_feature_vector(const FeatureContext& ctx);

// Range check against the declared type of the feature.
bool feature_in_range(FeatureId id, double value);

}  // namespace voltage
