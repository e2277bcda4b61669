#ifndef FLAMEDET_COLOR_SPACE_HPP
#define FLAMEDET_COLOR_SPACE_HPP

#include <vector>

#include "flamedet/imaging.hpp"

namespace flamedet {

/// Planar CIELAB image (D65 white point), one double per channel per pixel.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<double> l;
    std::vector<double> a;
    std::vector<double> b;

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

/// sRGB (8-bit) to CIELAB under D65. Throws DataError on non-3-channel input.
LabImage srgb_to_lab(const Frame& frame);

/// Separable 5x5 binomial smoothing ([1 4 6 4 1]/16 per axis), borders
/// replicated.
LabImage binomial_smooth_5x5(const LabImage& img);

}  // namespace flamedet

#endif
