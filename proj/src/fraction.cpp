#include "flamedet/fraction.hpp"

#include <cctype>
#include <numeric>

#include "flamedet/errors.hpp"

namespace flamedet {

std::string Fraction::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_digits(const std::string& s, std::size_t begin, std::size_t end,
                          const std::string& full) {
    if (begin >= end) {
        throw DataError("bad fraction '" + full + "'");
    }
    std::int64_t v = 0;
    for (std::size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw DataError("bad fraction '" + full + "'");
        }
        v = v * 10 + (s[i] - '0');
        if (v > (std::int64_t{1} << 40)) {
            throw DataError("fraction too large '" + full + "'");
        }
    }
    return v;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
    Fraction f;
    const std::size_t slash = text.find('/');
    const std::size_t dot = text.find('.');
    if (slash != std::string::npos) {
        f.num = parse_digits(text, 0, slash, text);
        f.den = parse_digits(text, slash + 1, text.size(), text);
        if (f.den == 0) {
            throw DataError("bad fraction '" + text + "': zero denominator");
        }
    } else if (dot != std::string::npos) {
        const std::int64_t whole = dot == 0 ? 0 : parse_digits(text, 0, dot, text);
        const std::size_t frac_digits = text.size() - dot - 1;
        if (frac_digits == 0 || frac_digits > 9) {
            throw DataError("bad fraction '" + text + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_digits; ++i) scale *= 10;
        f.num = whole * scale + parse_digits(text, dot + 1, text.size(), text);
        f.den = scale;
    } else {
        f.num = parse_digits(text, 0, text.size(), text);
        f.den = 1;
    }
    const std::int64_t g = std::gcd(f.num, f.den);
    if (g > 1) {
        f.num /= g;
        f.den /= g;
    }
    return f;
}

}  // namespace flamedet
