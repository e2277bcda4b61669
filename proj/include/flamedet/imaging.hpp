#ifndef FLAMEDET_IMAGING_HPP
#define FLAMEDET_IMAGING_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace flamedet {

/// Decoded raster image. Row-major, channel-interleaved samples.
/// channels is 3 (r, g, b) or 1 (gray), each sample in [0,255].
struct Frame {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y, int c) const {
        return data[static_cast<std::size_t>(y * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return data[static_cast<std::size_t>(y * width + x) * channels + c];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

Frame make_frame(int width, int height, int channels);

/// Per-pixel H, S, V planes, each normalized to [0,1].
struct HsvFrame {
    int width = 0;
    int height = 0;
    std::vector<double> hue;
    std::vector<double> saturation;
    std::vector<double> value;
};

/// Per-pixel scalar map with values in [0,1] (saliency maps, luma maps).
struct GrayMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

GrayMap make_gray_map(int width, int height, double fill = 0.0);

/// Per-pixel boolean mask. bits holds 0/1 per pixel, row-major.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
};

BinaryMask make_mask(int width, int height, bool fill = false);

/// Axis-aligned pixel rectangle, (x,y) inclusive origin, width x height extent.
struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

/// 256-bin histogram of quantized levels.
struct Histogram256 {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const;
};

/// Standard hexcone RGB -> HSV. Achromatic pixels (max == min) get H = 0,
/// S = 0. Throws DataError unless frame has 3 channels.
HsvFrame rgb_to_hsv(const Frame& frame);

/// ITU-601 luma, normalized: (0.299 R + 0.587 G + 0.114 B) / 255.
GrayMap to_grayscale(const Frame& frame);

/// Bin each value v at floor(v * 255 + 0.5). Values must be in [0,1].
Histogram256 quantize_histogram(const GrayMap& map);

/// Level k in [0,255] maximizing the between-class variance for the split
/// {0..k} vs {k+1..255}. Ties resolve to the smallest k; a histogram with
/// all mass in one bin returns that bin. Comparisons are exact (integer
/// arithmetic) for totals up to ~450k pixels. Throws DataError when empty.
int otsu_threshold(const Histogram256& hist);

/// Pointwise conjunction. Dimensions must match.
BinaryMask mask_and(const BinaryMask& a, const BinaryMask& b);

/// Number of set bits inside `region`, which must lie within bounds.
std::uint64_t mask_count(const BinaryMask& mask, const Rect& region);

/// Set bits over the whole mask.
std::uint64_t mask_area(const BinaryMask& mask);

}  // namespace flamedet

#endif
