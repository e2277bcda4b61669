#include "flamedet/color_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "flamedet/errors.hpp"

namespace flamedet {

namespace {

std::array<double, 256> make_linear_table() {
    std::array<double, 256> table{};
    for (int i = 0; i < 256; ++i) {
        const double c = i / 255.0;
        table[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return table;
}

double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    constexpr double delta3 = delta * delta * delta;
    return t > delta3 ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

void smooth_plane(const std::vector<double>& src, std::vector<double>& dst, int width,
                  int height) {
    static constexpr double kKernel[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    std::vector<double> tmp(src.size());
    for (int y = 0; y < height; ++y) {
        const double* row = src.data() + static_cast<std::size_t>(y) * width;
        double* out = tmp.data() + static_cast<std::size_t>(y) * width;
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) {
                const int xx = std::clamp(x + k, 0, width - 1);
                acc += kKernel[k + 2] * row[xx];
            }
            out[x] = acc;
        }
    }
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) {
                const int yy = std::clamp(y + k, 0, height - 1);
                acc += kKernel[k + 2] * tmp[static_cast<std::size_t>(yy) * width + x];
            }
            dst[static_cast<std::size_t>(y) * width + x] = acc;
        }
    }
}

}  // namespace

LabImage srgb_to_lab(const Frame& frame) {
    if (frame.channels != 3) {
        throw DataError("srgb_to_lab: expected a 3-channel frame");
    }
    static const std::array<double, 256> linear = make_linear_table();
    constexpr double xn = 0.95047, yn = 1.0, zn = 1.08883;

    LabImage out;
    out.width = frame.width;
    out.height = frame.height;
    const std::size_t n = frame.pixel_count();
    out.l.resize(n);
    out.a.resize(n);
    out.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = linear[frame.data[i * 3 + 0]];
        const double g = linear[frame.data[i * 3 + 1]];
        const double b = linear[frame.data[i * 3 + 2]];
        const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
        const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
        const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
        const double fx = lab_f(x / xn);
        const double fy = lab_f(y / yn);
        const double fz = lab_f(z / zn);
        out.l[i] = 116.0 * fy - 16.0;
        out.a[i] = 500.0 * (fx - fy);
        out.b[i] = 200.0 * (fy - fz);
    }
    return out;
}

LabImage binomial_smooth_5x5(const LabImage& img) {
    LabImage out;
    out.width = img.width;
    out.height = img.height;
    out.l.resize(img.l.size());
    out.a.resize(img.a.size());
    out.b.resize(img.b.size());
    smooth_plane(img.l, out.l, img.width, img.height);
    smooth_plane(img.a, out.a, img.width, img.height);
    smooth_plane(img.b, out.b, img.width, img.height);
    return out;
}

}  // namespace flamedet
