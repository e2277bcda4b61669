#ifndef FLAMEDET_CLIP_IO_HPP
#define FLAMEDET_CLIP_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "flamedet/imaging.hpp"

namespace flamedet {

/// Ordered frame sequence. All frames share dimensions and channel count.
/// frame_rate is carried as metadata only and never affects detection.
struct Clip {
    std::vector<Frame> frames;
    double frame_rate = 0.0;
    std::string source_id;

    int width() const { return frames.empty() ? 0 : frames.front().width; }
    int height() const { return frames.empty() ? 0 : frames.front().height; }
    std::size_t size() const { return frames.size(); }
};

/// View of `length` consecutive frames of a clip starting at start_index.
struct ClipWindow {
    const Clip* clip = nullptr;
    int start_index = 0;
    int length = 0;

    const Frame& frame(int t) const { return clip->frames[start_index + t]; }
};

/// Decode a binary PPM (P6) or PGM (P5) file, maxval 255.
Frame load_netpbm(const std::filesystem::path& file);

/// Write a frame as binary PPM (3 channels) or PGM (1 channel), maxval 255.
void save_netpbm(const Frame& frame, const std::filesystem::path& file);

/// Load all files in `directory` matching `pattern` (shell glob over the
/// filename, e.g. "*.ppm"), ordered lexicographically (zero-padded numeric
/// names sort correctly). All frames must share dimensions and channels.
Clip load_frame_sequence(const std::filesystem::path& directory, const std::string& pattern);

/// Nearest-neighbor resample to exactly target_width x target_height.
/// Identity when already at target.
Frame rescale(const Frame& frame, int target_width, int target_height);

/// Fixed-length windows at start 0, stride, 2*stride, ...; a partial tail is
/// dropped. Throws DataError when the clip is shorter than one window.
std::vector<ClipWindow> windows(const Clip& clip, int length = 30, int stride = 15);

}  // namespace flamedet

#endif
