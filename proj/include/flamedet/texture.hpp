#ifndef FLAMEDET_TEXTURE_HPP
#define FLAMEDET_TEXTURE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "flamedet/clip_io.hpp"
#include "flamedet/fraction.hpp"
#include "flamedet/imaging.hpp"

namespace flamedet {

/// Spatio-temporal grayscale block. Voxels are rounded ITU-601 luma in
/// [0,255], laid out t-major: data[(t*height + y)*width + x].
struct Block3D {
    int x0 = 0;
    int y0 = 0;
    int t0 = 0;  // window-relative temporal origin
    int width = 0;
    int height = 0;
    int depth = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y, int t) const {
        return data[(static_cast<std::size_t>(t) * height + y) * width + x];
    }
    std::uint8_t& at(int x, int y, int t) {
        return data[(static_cast<std::size_t>(t) * height + y) * width + x];
    }
};

/// Concatenated LBP histograms of the xy, xt and yt planes, 256 bins each.
struct LbpTopFeature {
    std::array<std::uint32_t, 256> xy_hist{};
    std::array<std::uint32_t, 256> xt_hist{};
    std::array<std::uint32_t, 256> yt_hist{};

    /// Flattened (xy, xt, yt) order, 768 values.
    std::vector<double> to_vector() const;
};

/// Block classification target: +1 fire, -1 non-fire.
struct BlockLabel {
    int value = -1;
};

/// Non-overlapping spatial tiling of a window into block_size^2 x depth
/// volumes, row-major over the block grid. Frame dimensions must be
/// divisible by block_size. Voxels are the frames' rounded luma.
std::vector<Block3D> partition_blocks(const ClipWindow& window, int block_size = 16);

/// 8-neighbor LBP code; bit i (LSB first) is set iff neighbors[i] >= center.
/// Neighbors are ordered clockwise starting at the top-left.
int lbp_code(std::uint8_t center, const std::array<std::uint8_t, 8>& neighbors);

/// LBP-TOP histograms. Interior-only: xy codes for x,y interior over all t;
/// xt codes for x,t interior over all y; yt codes for y,t interior over all
/// x. Requires width, height, depth >= 3.
LbpTopFeature lbp_top(const Block3D& block);

/// Keep blocks whose salient voxel count, summed over the per-frame masks,
/// strictly exceeds `fraction` of the block volume. Order is preserved.
std::vector<Block3D> select_blocks(const std::vector<Block3D>& blocks,
                                   const std::vector<BinaryMask>& masks,
                                   const Fraction& fraction = Fraction{1, 8});

/// One feature-dump record: 768 counts plus provenance and optional label.
struct FeatureRecord {
    int window_start = 0;
    int block_col = 0;
    int block_row = 0;
    std::optional<int> label;  // +1 / -1
    std::vector<double> features;
};

/// CSV header shared by the writer and parser:
/// window_start,block_col,block_row,label,xy_000..xy_255,xt_000..xt_255,yt_000..yt_255
std::string feature_csv_header();

void write_feature_csv(std::ostream& out, const std::vector<FeatureRecord>& records);
std::vector<FeatureRecord> read_feature_csv(std::istream& in);

}  // namespace flamedet

#endif
