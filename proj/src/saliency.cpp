#include "flamedet/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "flamedet/color_space.hpp"
#include "flamedet/errors.hpp"

namespace flamedet {

SaliencyBackendId saliency_backend_from_string(const std::string& name) {
    if (name == "frequency_tuned") return SaliencyBackendId::kFrequencyTuned;
    if (name == "max_symmetric_surround") return SaliencyBackendId::kMaxSymmetricSurround;
    throw DataError("unknown saliency backend '" + name + "'");
}

std::string to_string(SaliencyBackendId id) {
    switch (id) {
        case SaliencyBackendId::kFrequencyTuned:
            return "frequency_tuned";
        case SaliencyBackendId::kMaxSymmetricSurround:
            return "max_symmetric_surround";
    }
    return "?";
}

namespace {

GrayMap normalize(std::vector<double> raw, int width, int height) {
    const auto [mn_it, mx_it] = std::minmax_element(raw.begin(), raw.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    GrayMap out = make_gray_map(width, height);
    if (mx > mn) {
        const double scale = 1.0 / (mx - mn);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            out.data[i] = (raw[i] - mn) * scale;
        }
    }
    return out;
}

std::vector<double> frequency_tuned_raw(const LabImage& lab, const LabImage& smoothed) {
    const std::size_t n = lab.l.size();
    double ml = 0.0, ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ml += lab.l[i];
        ma += lab.a[i];
        mb += lab.b[i];
    }
    ml /= n;
    ma /= n;
    mb /= n;
    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dl = smoothed.l[i] - ml;
        const double da = smoothed.a[i] - ma;
        const double db = smoothed.b[i] - mb;
        raw[i] = dl * dl + da * da + db * db;
    }
    return raw;
}

// Inclusive-rectangle sums via a summed-area table with a zero top/left rim.
struct Integral {
    int width;
    std::vector<double> sums;

    Integral(const std::vector<double>& plane, int w, int h) : width(w + 1) {
        sums.assign(static_cast<std::size_t>(w + 1) * (h + 1), 0.0);
        for (int y = 0; y < h; ++y) {
            double row = 0.0;
            for (int x = 0; x < w; ++x) {
                row += plane[static_cast<std::size_t>(y) * w + x];
                sums[static_cast<std::size_t>(y + 1) * width + (x + 1)] =
                    sums[static_cast<std::size_t>(y) * width + (x + 1)] + row;
            }
        }
    }

    double rect(int x0, int y0, int x1, int y1) const {  // inclusive corners
        return sums[static_cast<std::size_t>(y1 + 1) * width + (x1 + 1)] -
               sums[static_cast<std::size_t>(y0) * width + (x1 + 1)] -
               sums[static_cast<std::size_t>(y1 + 1) * width + x0] +
               sums[static_cast<std::size_t>(y0) * width + x0];
    }
};

std::vector<double> max_symmetric_surround_raw(const LabImage& smoothed) {
    const int w = smoothed.width;
    const int h = smoothed.height;
    Integral il(smoothed.l, w, h), ia(smoothed.a, w, h), ib(smoothed.b, w, h);
    std::vector<double> raw(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int r = std::min(std::min(x, y), std::min(w - 1 - x, h - 1 - y));
            const int x0 = x - r, x1 = x + r, y0 = y - r, y1 = y + r;
            const double area = static_cast<double>(2 * r + 1) * (2 * r + 1);
            const std::size_t i = smoothed.index(x, y);
            const double dl = smoothed.l[i] - il.rect(x0, y0, x1, y1) / area;
            const double da = smoothed.a[i] - ia.rect(x0, y0, x1, y1) / area;
            const double db = smoothed.b[i] - ib.rect(x0, y0, x1, y1) / area;
            raw[i] = dl * dl + da * da + db * db;
        }
    }
    return raw;
}

}  // namespace

GrayMap compute_saliency(const Frame& frame, SaliencyBackendId backend) {
    if (frame.channels != 3) {
        throw DataError("compute_saliency: expected a 3-channel frame");
    }
    const LabImage lab = srgb_to_lab(frame);
    const LabImage smoothed = binomial_smooth_5x5(lab);
    std::vector<double> raw;
    switch (backend) {
        case SaliencyBackendId::kFrequencyTuned:
            raw = frequency_tuned_raw(lab, smoothed);
            break;
        case SaliencyBackendId::kMaxSymmetricSurround:
            raw = max_symmetric_surround_raw(smoothed);
            break;
    }
    return normalize(std::move(raw), frame.width, frame.height);
}

}  // namespace flamedet
