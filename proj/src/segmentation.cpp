#include "flamedet/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "flamedet/color_space.hpp"
#include "flamedet/errors.hpp"

namespace flamedet {

BlockStats block_stats(const GrayMap& map, int block_size) {
    if (block_size <= 0) {
        throw DataError("block_stats: block size must be positive");
    }
    if (map.width < block_size || map.height < block_size) {
        throw DataError("block_stats: map smaller than one block");
    }
    BlockStats stats;
    stats.grid_cols = (map.width + block_size - 1) / block_size;
    stats.grid_rows = (map.height + block_size - 1) / block_size;
    stats.means.reserve(static_cast<std::size_t>(stats.grid_cols) * stats.grid_rows);
    stats.variances.reserve(stats.means.capacity());
    for (int by = 0; by < stats.grid_rows; ++by) {
        for (int bx = 0; bx < stats.grid_cols; ++bx) {
            const int x0 = bx * block_size;
            const int y0 = by * block_size;
            const int x1 = std::min(x0 + block_size, map.width);
            const int y1 = std::min(y0 + block_size, map.height);
            double sum = 0.0;
            double sum_sq = 0.0;
            for (int y = y0; y < y1; ++y) {
                for (int x = x0; x < x1; ++x) {
                    const double v = map.at(x, y);
                    sum += v;
                    sum_sq += v * v;
                }
            }
            const double n = static_cast<double>(x1 - x0) * (y1 - y0);
            const double mean = sum / n;
            stats.means.push_back(mean);
            stats.variances.push_back(std::max(0.0, sum_sq / n - mean * mean));
        }
    }
    return stats;
}

double max_local_mean(const BlockStats& stats) {
    if (stats.means.empty()) {
        throw DataError("max_local_mean: no blocks");
    }
    return *std::max_element(stats.means.begin(), stats.means.end());
}

BinaryMask saliency_segment(const GrayMap& map, const Frame& input_frame, int block_size) {
    if (map.width != input_frame.width || map.height != input_frame.height) {
        throw DataError("saliency_segment: map/frame dimension mismatch");
    }
    const double gt = otsu_threshold(quantize_histogram(to_grayscale(input_frame))) / 255.0;
    const double threshold = std::max(0.0, max_local_mean(block_stats(map, block_size)) - gt);
    BinaryMask mask = make_mask(map.width, map.height);
    for (std::size_t i = 0; i < map.data.size(); ++i) {
        mask.bits[i] = map.data[i] >= threshold ? 1 : 0;
    }
    return mask;
}

namespace {

struct Offset {
    int dx;
    int dy;
    int spatial_sq;
};

std::vector<Offset> ring_ordered_offsets(int radius) {
    std::vector<Offset> offsets;
    offsets.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1) - 1);
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dx == 0 && dy == 0) continue;
            offsets.push_back({dx, dy, dx * dx + dy * dy});
        }
    }
    std::stable_sort(offsets.begin(), offsets.end(), [](const Offset& a, const Offset& b) {
        if (a.spatial_sq != b.spatial_sq) return a.spatial_sq < b.spatial_sq;
        if (a.dy != b.dy) return a.dy < b.dy;
        return a.dx < b.dx;
    });
    return offsets;
}

}  // namespace

QuickShiftForest quickshift_forest(const Frame& frame, const QuickShiftParams& params) {
    if (frame.channels != 3) {
        throw DataError("quickshift: expected a 3-channel frame");
    }
    if (params.sigma <= 0.0 || params.tau <= 0.0) {
        throw DataError("quickshift: sigma and tau must be positive");
    }
    if (params.ratio < 0.0 || params.ratio > 1.0) {
        throw DataError("quickshift: ratio must be in [0,1]");
    }
    const int w = frame.width;
    const int h = frame.height;
    const LabImage lab = srgb_to_lab(frame);

    const double inv_two_sigma_sq = 1.0 / (2.0 * params.sigma * params.sigma);
    const double ratio_sq = params.ratio * params.ratio;

    // Density over the full window; colors sampled at clamped coordinates,
    // spatial offsets counted as-is. The term sequence is then identical for
    // every pixel of a constant image, so densities tie bit-exactly there.
    const int density_radius = static_cast<int>(std::ceil(3.0 * params.sigma));
    const int win = 2 * density_radius + 1;
    std::vector<double> spatial_factor(static_cast<std::size_t>(win) * win);
    for (int dy = -density_radius; dy <= density_radius; ++dy) {
        for (int dx = -density_radius; dx <= density_radius; ++dx) {
            spatial_factor[static_cast<std::size_t>(dy + density_radius) * win +
                           (dx + density_radius)] =
                std::exp(-ratio_sq * (dx * dx + dy * dy) * inv_two_sigma_sq);
        }
    }

    QuickShiftForest forest;
    forest.width = w;
    forest.height = h;
    forest.density.assign(static_cast<std::size_t>(w) * h, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t p = lab.index(x, y);
            double sum = 0.0;
            for (int dy = -density_radius; dy <= density_radius; ++dy) {
                const int qy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -density_radius; dx <= density_radius; ++dx) {
                    const int qx = std::clamp(x + dx, 0, w - 1);
                    const std::size_t q = lab.index(qx, qy);
                    const double dl = lab.l[p] - lab.l[q];
                    const double da = lab.a[p] - lab.a[q];
                    const double db = lab.b[p] - lab.b[q];
                    const double color_sq = dl * dl + da * da + db * db;
                    sum += spatial_factor[static_cast<std::size_t>(dy + density_radius) * win +
                                          (dx + density_radius)] *
                           std::exp(-color_sq * inv_two_sigma_sq);
                }
            }
            forest.density[p] = sum;
        }
    }

    // Parent: nearest strictly denser pixel within feature distance tau.
    // Offsets are scanned in ring order so the search can stop once the
    // spatial term alone exceeds the best distance found.
    const int parent_radius =
        params.ratio > 0.0
            ? std::min<int>(std::max(w, h),
                            static_cast<int>(std::ceil(params.tau / params.ratio)))
            : std::max(w, h);
    const std::vector<Offset> offsets = ring_ordered_offsets(parent_radius);
    const double tau_sq = params.tau * params.tau;

    forest.parents.assign(static_cast<std::size_t>(w) * h, -1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t p = lab.index(x, y);
            const double ep = forest.density[p];
            double best_sq = tau_sq;
            std::int64_t best = -1;
            for (const Offset& o : offsets) {
                const double spatial_term = ratio_sq * o.spatial_sq;
                if (spatial_term > best_sq) break;  // ring order: nothing closer remains
                const int qx = x + o.dx;
                const int qy = y + o.dy;
                if (qx < 0 || qy < 0 || qx >= w || qy >= h) continue;
                const std::size_t q = lab.index(qx, qy);
                if (!(forest.density[q] > ep)) continue;
                const double dl = lab.l[p] - lab.l[q];
                const double da = lab.a[p] - lab.a[q];
                const double db = lab.b[p] - lab.b[q];
                const double d_sq = spatial_term + dl * dl + da * da + db * db;
                if (best < 0 ? d_sq <= best_sq : d_sq < best_sq) {
                    best_sq = d_sq;
                    best = static_cast<std::int64_t>(q);
                }
            }
            forest.parents[p] = best;
        }
    }
    return forest;
}

SuperpixelLabels quickshift(const Frame& frame, const QuickShiftParams& params) {
    const QuickShiftForest forest = quickshift_forest(frame, params);
    const std::size_t n = forest.parents.size();

    SuperpixelLabels out;
    out.width = forest.width;
    out.height = forest.height;
    out.labels.assign(n, -1);

    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.labels[i] >= 0) continue;
        path.clear();
        std::size_t cur = i;
        while (out.labels[cur] < 0 && forest.parents[cur] >= 0) {
            path.push_back(cur);
            cur = static_cast<std::size_t>(forest.parents[cur]);
        }
        int label;
        if (out.labels[cur] >= 0) {
            label = out.labels[cur];
        } else {
            label = out.segment_count++;  // new root, first occurrence
            out.labels[cur] = label;
        }
        for (std::size_t p : path) {
            out.labels[p] = label;
        }
    }
    return out;
}

BinaryMask grow_regions(const BinaryMask& mask, const SuperpixelLabels& labels,
                        const Fraction& min_overlap) {
    if (mask.width != labels.width || mask.height != labels.height) {
        throw DataError("grow_regions: dimension mismatch");
    }
    std::vector<std::uint64_t> segment_size(labels.segment_count, 0);
    std::vector<std::uint64_t> segment_hits(labels.segment_count, 0);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        const int s = labels.labels[i];
        ++segment_size[s];
        segment_hits[s] += mask.bits[i];
    }
    std::vector<std::uint8_t> fill(labels.segment_count, 0);
    for (int s = 0; s < labels.segment_count; ++s) {
        fill[s] = min_overlap.strictly_less_than(segment_hits[s], segment_size[s]) ? 1 : 0;
    }
    BinaryMask out = mask;
    for (std::size_t i = 0; i < out.bits.size(); ++i) {
        out.bits[i] |= fill[labels.labels[i]];
    }
    return out;
}

}  // namespace flamedet
