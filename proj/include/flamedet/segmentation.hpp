#ifndef FLAMEDET_SEGMENTATION_HPP
#define FLAMEDET_SEGMENTATION_HPP

#include <vector>

#include "flamedet/fraction.hpp"
#include "flamedet/imaging.hpp"

namespace flamedet {

/// Per-block mean/variance over a block grid. Edge blocks may be partial and
/// use only in-bounds pixels.
struct BlockStats {
    int grid_cols = 0;
    int grid_rows = 0;
    std::vector<double> means;
    std::vector<double> variances;
};

/// Per-pixel superpixel ids forming a partition: every id in
/// [0, segment_count) occurs at least once.
struct SuperpixelLabels {
    int width = 0;
    int height = 0;
    std::vector<int> labels;
    int segment_count = 0;

    int at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

struct QuickShiftParams {
    double sigma = 2.0;  // kernel bandwidth, feature-space units
    double tau = 8.0;    // maximum parent distance, feature-space units
    double ratio = 0.5;  // spatial-vs-color weight in [0,1]
};

/// Mean and (population) variance per block of a block_size grid;
/// grid_cols = ceil(width / block_size) and likewise for rows.
BlockStats block_stats(const GrayMap& map, int block_size = 32);

/// Highest mean among all blocks.
double max_local_mean(const BlockStats& stats);

/// Threshold the saliency map at max_local_mean - GT, where GT is the Otsu
/// level of the input frame's luma divided by 255. The threshold clamps at 0.
BinaryMask saliency_segment(const GrayMap& map, const Frame& input_frame, int block_size = 32);

/// Quick-shift superpixels. Features are (ratio*x, ratio*y, L, a, b) in
/// CIELAB. The density at p sums exp(-d^2 / (2 sigma^2)) over the full
/// (2*ceil(3 sigma)+1)^2 offset window, sampling colors at border-clamped
/// coordinates so a constant image has identical density everywhere. Each
/// pixel links to its nearest (feature distance) strictly denser pixel
/// within tau; pixels with no such neighbor are roots. Labels are numbered
/// by first-occurrence scan order.
SuperpixelLabels quickshift(const Frame& frame, const QuickShiftParams& params);

/// Parent forest from the linking stage: parents[i] is the pixel index of
/// i's parent, or -1 for roots. Exposed for structural checks.
struct QuickShiftForest {
    int width = 0;
    int height = 0;
    std::vector<std::int64_t> parents;
    std::vector<double> density;
};

QuickShiftForest quickshift_forest(const Frame& frame, const QuickShiftParams& params);

/// Superpixel region growing: any segment whose overlap with the mask
/// exceeds min_overlap (strict) is set entirely. Output is a superset of
/// the input mask.
BinaryMask grow_regions(const BinaryMask& mask, const SuperpixelLabels& labels,
                        const Fraction& min_overlap = Fraction{1, 3});

}  // namespace flamedet

#endif
