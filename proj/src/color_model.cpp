#include "flamedet/color_model.hpp"

#include <algorithm>

#include "flamedet/errors.hpp"

namespace flamedet {

namespace {

double channel_otsu(const std::vector<double>& channel, int width, int height) {
    GrayMap map;
    map.width = width;
    map.height = height;
    map.data = channel;
    return otsu_threshold(quantize_histogram(map)) / 255.0;
}

}  // namespace

ColorThresholds channel_thresholds(const HsvFrame& hsv, const ColorPriors& priors) {
    ColorThresholds t;
    t.gt_hue = channel_otsu(hsv.hue, hsv.width, hsv.height);
    t.gt_saturation = channel_otsu(hsv.saturation, hsv.width, hsv.height);
    t.gt_value = channel_otsu(hsv.value, hsv.width, hsv.height);
    if (priors.clamp_hue) {
        t.gt_hue = std::min(t.gt_hue, priors.hue_max);
    }
    return t;
}

BinaryMask fire_color_mask(const HsvFrame& hsv, const ColorThresholds& t) {
    BinaryMask mask = make_mask(hsv.width, hsv.height);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        const bool hue_ok = hsv.hue[i] <= t.gt_hue;
        const bool sat_ok = hsv.saturation[i] >= t.gt_saturation;
        const bool val_ok = hsv.value[i] >= t.gt_value;
        mask.bits[i] = (hue_ok && sat_ok && val_ok) ? 1 : 0;
    }
    return mask;
}

BinaryMask combine_with_saliency(const BinaryMask& color_mask, const BinaryMask& saliency_mask) {
    return mask_and(color_mask, saliency_mask);
}

}  // namespace flamedet
