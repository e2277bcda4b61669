#ifndef FLAMEDET_FRACTION_HPP
#define FLAMEDET_FRACTION_HPP

#include <cstdint>
#include <string>

namespace flamedet {

/// Exact non-negative rational. Thresholds like "more than 1/3 overlap" are
/// compared in integer arithmetic so boundary cases are unambiguous.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// True iff value > (*this) * scale, evaluated exactly.
    bool strictly_less_than(std::uint64_t value, std::uint64_t scale) const {
        return static_cast<__int128>(value) * den > static_cast<__int128>(num) * scale;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

/// Parses "a/b" or a plain decimal ("0.25" becomes 25/100 exactly).
Fraction parse_fraction(const std::string& text);

}  // namespace flamedet

#endif
