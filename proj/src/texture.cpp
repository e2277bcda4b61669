#include "flamedet/texture.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "flamedet/errors.hpp"

namespace flamedet {

std::vector<double> LbpTopFeature::to_vector() const {
    std::vector<double> v;
    v.reserve(768);
    for (auto c : xy_hist) v.push_back(static_cast<double>(c));
    for (auto c : xt_hist) v.push_back(static_cast<double>(c));
    for (auto c : yt_hist) v.push_back(static_cast<double>(c));
    return v;
}

namespace {

std::uint8_t luma_u8(const Frame& frame, int x, int y) {
    const double v = 0.299 * frame.at(x, y, 0) + 0.587 * frame.at(x, y, 1) +
                     0.114 * frame.at(x, y, 2);
    return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

}  // namespace

std::vector<Block3D> partition_blocks(const ClipWindow& window, int block_size) {
    if (block_size <= 0) {
        throw DataError("partition_blocks: block size must be positive");
    }
    const Frame& first = window.frame(0);
    if (first.width % block_size != 0 || first.height % block_size != 0) {
        std::ostringstream msg;
        msg << "partition_blocks: " << first.width << "x" << first.height
            << " is not divisible by block size " << block_size << "; rescale the input first";
        throw DataError(msg.str());
    }
    const int cols = first.width / block_size;
    const int rows = first.height / block_size;
    const int depth = window.length;

    // one luma plane per frame, shared by all blocks of the window
    std::vector<std::vector<std::uint8_t>> luma(depth);
    for (int t = 0; t < depth; ++t) {
        const Frame& f = window.frame(t);
        luma[t].resize(f.pixel_count());
        if (f.channels == 3) {
            for (int y = 0; y < f.height; ++y) {
                for (int x = 0; x < f.width; ++x) {
                    luma[t][static_cast<std::size_t>(y) * f.width + x] = luma_u8(f, x, y);
                }
            }
        } else {
            luma[t] = f.data;
        }
    }

    std::vector<Block3D> blocks;
    blocks.reserve(static_cast<std::size_t>(cols) * rows);
    for (int by = 0; by < rows; ++by) {
        for (int bx = 0; bx < cols; ++bx) {
            Block3D b;
            b.x0 = bx * block_size;
            b.y0 = by * block_size;
            b.t0 = 0;
            b.width = block_size;
            b.height = block_size;
            b.depth = depth;
            b.data.resize(static_cast<std::size_t>(block_size) * block_size * depth);
            for (int t = 0; t < depth; ++t) {
                for (int y = 0; y < block_size; ++y) {
                    const std::uint8_t* src =
                        luma[t].data() + static_cast<std::size_t>(b.y0 + y) * first.width + b.x0;
                    std::uint8_t* dst =
                        b.data.data() + (static_cast<std::size_t>(t) * block_size + y) * block_size;
                    std::copy(src, src + block_size, dst);
                }
            }
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

int lbp_code(std::uint8_t center, const std::array<std::uint8_t, 8>& neighbors) {
    int code = 0;
    for (int i = 0; i < 8; ++i) {
        if (neighbors[i] >= center) {
            code |= 1 << i;
        }
    }
    return code;
}

LbpTopFeature lbp_top(const Block3D& block) {
    if (block.width < 3 || block.height < 3 || block.depth < 3) {
        throw DataError("lbp_top: block must be at least 3 in every dimension");
    }
    const int w = block.width;
    const int h = block.height;
    const int d = block.depth;
    LbpTopFeature f;

    // xy plane: spatial neighbors within one frame
    for (int t = 0; t < d; ++t) {
        for (int y = 1; y < h - 1; ++y) {
            for (int x = 1; x < w - 1; ++x) {
                const std::uint8_t c = block.at(x, y, t);
                int code = 0;
                if (block.at(x - 1, y - 1, t) >= c) code |= 1;
                if (block.at(x, y - 1, t) >= c) code |= 2;
                if (block.at(x + 1, y - 1, t) >= c) code |= 4;
                if (block.at(x + 1, y, t) >= c) code |= 8;
                if (block.at(x + 1, y + 1, t) >= c) code |= 16;
                if (block.at(x, y + 1, t) >= c) code |= 32;
                if (block.at(x - 1, y + 1, t) >= c) code |= 64;
                if (block.at(x - 1, y, t) >= c) code |= 128;
                ++f.xy_hist[code];
            }
        }
    }
    // xt plane: fixed y, neighbors over x and t
    for (int y = 0; y < h; ++y) {
        for (int t = 1; t < d - 1; ++t) {
            for (int x = 1; x < w - 1; ++x) {
                const std::uint8_t c = block.at(x, y, t);
                int code = 0;
                if (block.at(x - 1, y, t - 1) >= c) code |= 1;
                if (block.at(x, y, t - 1) >= c) code |= 2;
                if (block.at(x + 1, y, t - 1) >= c) code |= 4;
                if (block.at(x + 1, y, t) >= c) code |= 8;
                if (block.at(x + 1, y, t + 1) >= c) code |= 16;
                if (block.at(x, y, t + 1) >= c) code |= 32;
                if (block.at(x - 1, y, t + 1) >= c) code |= 64;
                if (block.at(x - 1, y, t) >= c) code |= 128;
                ++f.xt_hist[code];
            }
        }
    }
    // yt plane: fixed x, neighbors over y and t
    for (int x = 0; x < w; ++x) {
        for (int t = 1; t < d - 1; ++t) {
            for (int y = 1; y < h - 1; ++y) {
                const std::uint8_t c = block.at(x, y, t);
                int code = 0;
                if (block.at(x, y - 1, t - 1) >= c) code |= 1;
                if (block.at(x, y, t - 1) >= c) code |= 2;
                if (block.at(x, y + 1, t - 1) >= c) code |= 4;
                if (block.at(x, y + 1, t) >= c) code |= 8;
                if (block.at(x, y + 1, t + 1) >= c) code |= 16;
                if (block.at(x, y, t + 1) >= c) code |= 32;
                if (block.at(x, y - 1, t + 1) >= c) code |= 64;
                if (block.at(x, y - 1, t) >= c) code |= 128;
                ++f.yt_hist[code];
            }
        }
    }
    return f;
}

std::vector<Block3D> select_blocks(const std::vector<Block3D>& blocks,
                                   const std::vector<BinaryMask>& masks,
                                   const Fraction& fraction) {
    std::vector<Block3D> kept;
    for (const Block3D& b : blocks) {
        if (masks.size() != static_cast<std::size_t>(b.depth)) {
            throw DataError("select_blocks: mask count does not match block depth");
        }
        std::uint64_t salient = 0;
        const Rect footprint{b.x0, b.y0, b.width, b.height};
        for (const BinaryMask& m : masks) {
            salient += mask_count(m, footprint);
        }
        const std::uint64_t volume =
            static_cast<std::uint64_t>(b.width) * b.height * static_cast<std::uint64_t>(b.depth);
        if (fraction.strictly_less_than(salient, volume)) {
            kept.push_back(b);
        }
    }
    return kept;
}

std::string feature_csv_header() {
    std::ostringstream out;
    out << "window_start,block_col,block_row,label";
    const char* plane[3] = {"xy", "xt", "yt"};
    for (int p = 0; p < 3; ++p) {
        for (int i = 0; i < 256; ++i) {
            out << ',' << plane[p] << '_';
            out << i / 100 << (i / 10) % 10 << i % 10;
        }
    }
    return out.str();
}

void write_feature_csv(std::ostream& out, const std::vector<FeatureRecord>& records) {
    out << feature_csv_header() << '\n';
    for (const FeatureRecord& r : records) {
        out << r.window_start << ',' << r.block_col << ',' << r.block_row << ',';
        if (r.label) {
            out << *r.label;
        }
        for (double v : r.features) {
            out << ',' << static_cast<long long>(v);
        }
        out << '\n';
    }
}

std::vector<FeatureRecord> read_feature_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("feature csv: empty file");
    }
    if (line != feature_csv_header()) {
        throw DataError("feature csv: unexpected header");
    }
    std::vector<FeatureRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        FeatureRecord rec;
        rec.features.reserve(768);
        std::size_t pos = 0;
        int field = 0;
        while (pos <= line.size()) {
            const std::size_t comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                switch (field) {
                    case 0: rec.window_start = std::stoi(cell); break;
                    case 1: rec.block_col = std::stoi(cell); break;
                    case 2: rec.block_row = std::stoi(cell); break;
                    case 3:
                        if (!cell.empty()) {
                            const int v = std::stoi(cell);
                            if (v != 1 && v != -1) {
                                throw DataError("feature csv: label must be +1 or -1");
                            }
                            rec.label = v;
                        }
                        break;
                    default: rec.features.push_back(std::stod(cell)); break;
                }
            } catch (const std::invalid_argument&) {
                throw DataError("feature csv: bad value at line " + std::to_string(line_no));
            } catch (const std::out_of_range&) {
                throw DataError("feature csv: bad value at line " + std::to_string(line_no));
            }
            ++field;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (rec.features.size() != 768) {
            throw DataError("feature csv: expected 768 feature columns at line " +
                            std::to_string(line_no));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace flamedet
