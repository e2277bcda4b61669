#ifndef FLAMEDET_COLOR_MODEL_HPP
#define FLAMEDET_COLOR_MODEL_HPP

#include "flamedet/imaging.hpp"

namespace flamedet {

/// Per-channel global thresholds, each in [0,1].
struct ColorThresholds {
    double gt_hue = 0.0;
    double gt_saturation = 0.0;
    double gt_value = 0.0;
};

/// Constants from the offline fire-pixel study. Only hue_max participates in
/// thresholding (as a cap, when clamp_hue is set); sat_min and val_min are
/// carried for experimentation.
struct ColorPriors {
    double hue_max = 0.2;
    double sat_min = 0.6;
    double val_min = 0.6;
    bool clamp_hue = true;
};

/// Otsu threshold of each HSV channel's 256-bin histogram, divided by 255.
/// With clamp_hue, gt_hue is capped at priors.hue_max; saturation and value
/// thresholds are used as computed.
ColorThresholds channel_thresholds(const HsvFrame& hsv, const ColorPriors& priors);

/// Pixel set iff H <= gt_hue AND S >= gt_saturation AND V >= gt_value
/// (closed intervals on all sides).
BinaryMask fire_color_mask(const HsvFrame& hsv, const ColorThresholds& t);

/// Pointwise AND of the color mask with the saliency mask.
BinaryMask combine_with_saliency(const BinaryMask& color_mask, const BinaryMask& saliency_mask);

}  // namespace flamedet

#endif
