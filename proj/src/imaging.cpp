#include "flamedet/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flamedet/errors.hpp"

namespace flamedet {

Frame make_frame(int width, int height, int channels) {
    if (width <= 0 || height <= 0 || (channels != 1 && channels != 3)) {
        throw DataError("make_frame: bad dimensions or channel count");
    }
    Frame f;
    f.width = width;
    f.height = height;
    f.channels = channels;
    f.data.assign(static_cast<std::size_t>(width) * height * channels, 0);
    return f;
}

GrayMap make_gray_map(int width, int height, double fill) {
    GrayMap m;
    m.width = width;
    m.height = height;
    m.data.assign(static_cast<std::size_t>(width) * height, fill);
    return m;
}

BinaryMask make_mask(int width, int height, bool fill) {
    BinaryMask m;
    m.width = width;
    m.height = height;
    m.bits.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
    return m;
}

std::uint64_t Histogram256::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

HsvFrame rgb_to_hsv(const Frame& frame) {
    if (frame.channels != 3) {
        throw DataError("rgb_to_hsv: expected a 3-channel frame");
    }
    HsvFrame out;
    out.width = frame.width;
    out.height = frame.height;
    const std::size_t n = frame.pixel_count();
    out.hue.resize(n);
    out.saturation.resize(n);
    out.value.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = frame.data[i * 3 + 0] / 255.0;
        const double g = frame.data[i * 3 + 1] / 255.0;
        const double b = frame.data[i * 3 + 2] / 255.0;
        const double mx = std::max(r, std::max(g, b));
        const double mn = std::min(r, std::min(g, b));
        const double delta = mx - mn;
        double h = 0.0;
        double s = 0.0;
        if (delta > 0.0) {
            if (mx == r) {
                h = (g - b) / delta;
                if (h < 0.0) h += 6.0;
            } else if (mx == g) {
                h = (b - r) / delta + 2.0;
            } else {
                h = (r - g) / delta + 4.0;
            }
            h /= 6.0;
            s = delta / mx;  // mx > 0 since delta > 0
        }
        out.hue[i] = h;
        out.saturation[i] = s;
        out.value[i] = mx;
    }
    return out;
}

GrayMap to_grayscale(const Frame& frame) {
    if (frame.channels != 3) {
        throw DataError("to_grayscale: expected a 3-channel frame");
    }
    GrayMap out = make_gray_map(frame.width, frame.height);
    const std::size_t n = frame.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        out.data[i] = (0.299 * frame.data[i * 3 + 0] + 0.587 * frame.data[i * 3 + 1] +
                       0.114 * frame.data[i * 3 + 2]) /
                      255.0;
    }
    return out;
}

Histogram256 quantize_histogram(const GrayMap& map) {
    Histogram256 hist;
    for (double v : map.data) {
        int bin = static_cast<int>(std::floor(v * 255.0 + 0.5));
        bin = std::clamp(bin, 0, 255);
        ++hist.counts[bin];
    }
    return hist;
}

namespace {

// Between-class variance of the split {0..k} | {k+1..255} is
// (S0*W - S*W0)^2 / (W0*W1) up to a constant factor. Fractions are compared
// by cross-multiplication in 128-bit integers, which is exact for totals
// below ~450k; larger histograms fall back to long double.
struct VarianceScore {
    __int128 num_sq;  // (S0*W - S*W0)^2
    __int128 den;     // W0 * W1, > 0 unless the class split is degenerate
};

bool score_greater(const VarianceScore& a, const VarianceScore& b) {
    if (a.den == 0) return false;               // degenerate: score 0, never greater
    if (b.den == 0) return a.num_sq > 0;
    return a.num_sq * b.den > b.num_sq * a.den;
}

}  // namespace

int otsu_threshold(const Histogram256& hist) {
    const std::uint64_t total = hist.total();
    if (total == 0) {
        throw DataError("otsu_threshold: empty histogram");
    }

    int nonzero = -1;
    int nonzero_count = 0;
    for (int i = 0; i < 256; ++i) {
        if (hist.counts[i] > 0) {
            if (nonzero_count == 0) nonzero = i;
            ++nonzero_count;
        }
    }
    if (nonzero_count == 1) {
        return nonzero;  // all mass in one bin
    }

    std::uint64_t weighted_total = 0;
    for (int i = 0; i < 256; ++i) {
        weighted_total += hist.counts[i] * static_cast<std::uint64_t>(i);
    }

    const bool exact = total <= 450000;
    int best_k = 0;
    VarianceScore best{0, 0};
    long double best_ld = -1.0L;

    std::uint64_t w0 = 0;
    std::uint64_t s0 = 0;
    for (int k = 0; k < 256; ++k) {
        w0 += hist.counts[k];
        s0 += hist.counts[k] * static_cast<std::uint64_t>(k);
        const std::uint64_t w1 = total - w0;
        if (exact) {
            VarianceScore cur;
            if (w0 == 0 || w1 == 0) {
                cur = {0, 0};
            } else {
                const __int128 a = static_cast<__int128>(s0) * total -
                                   static_cast<__int128>(weighted_total) * w0;
                cur = {a * a, static_cast<__int128>(w0) * w1};
            }
            if (score_greater(cur, best)) {
                best = cur;
                best_k = k;
            }
        } else {
            long double cur = 0.0L;
            if (w0 != 0 && w1 != 0) {
                const long double a = static_cast<long double>(s0) * total -
                                      static_cast<long double>(weighted_total) * w0;
                cur = a * a / (static_cast<long double>(w0) * w1);
            }
            if (cur > best_ld) {
                best_ld = cur;
                best_k = k;
            }
        }
    }
    return best_k;
}

BinaryMask mask_and(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DataError("mask_and: dimension mismatch");
    }
    BinaryMask out = make_mask(a.width, a.height);
    for (std::size_t i = 0; i < out.bits.size(); ++i) {
        out.bits[i] = a.bits[i] & b.bits[i];
    }
    return out;
}

std::uint64_t mask_count(const BinaryMask& mask, const Rect& region) {
    if (region.x < 0 || region.y < 0 || region.width < 0 || region.height < 0 ||
        region.x + region.width > mask.width || region.y + region.height > mask.height) {
        throw DataError("mask_count: region out of bounds");
    }
    std::uint64_t count = 0;
    for (int y = region.y; y < region.y + region.height; ++y) {
        const std::uint8_t* row = mask.bits.data() + static_cast<std::size_t>(y) * mask.width;
        for (int x = region.x; x < region.x + region.width; ++x) {
            count += row[x];
        }
    }
    return count;
}

std::uint64_t mask_area(const BinaryMask& mask) {
    return std::accumulate(mask.bits.begin(), mask.bits.end(), std::uint64_t{0});
}

}  // namespace flamedet
