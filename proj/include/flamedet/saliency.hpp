#ifndef FLAMEDET_SALIENCY_HPP
#define FLAMEDET_SALIENCY_HPP

#include <string>

#include "flamedet/imaging.hpp"

namespace flamedet {

/// Pluggable saliency backends. Both operate on CIELAB color differences.
enum class SaliencyBackendId {
    /// Squared distance between the image's mean Lab color and the pixel's
    /// 5x5 binomial-smoothed Lab color.
    kFrequencyTuned,
    /// Squared distance between the smoothed Lab pixel and the mean smoothed
    /// color over the largest image-contained square window centered there.
    kMaxSymmetricSurround,
};

SaliencyBackendId saliency_backend_from_string(const std::string& name);
std::string to_string(SaliencyBackendId id);

/// Per-pixel conspicuity, min-max normalized to [0,1]; a constant raw map
/// yields all zeros. Throws DataError on grayscale input.
GrayMap compute_saliency(const Frame& frame, SaliencyBackendId backend);

}  // namespace flamedet

#endif
