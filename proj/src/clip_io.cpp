#include "flamedet/clip_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "flamedet/errors.hpp"

namespace fs = std::filesystem;

namespace flamedet {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in, const fs::path& file) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c == '#') in.unget();
    if (tok.empty()) {
        throw DataError("netpbm: truncated header in " + file.string());
    }
    return tok;
}

int parse_positive(const std::string& tok, const fs::path& file, const char* what) {
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw DataError("netpbm: bad " + std::string(what) + " in " + file.string());
        }
    }
    long v = std::stol(tok);
    if (v <= 0 || v > 1 << 20) {
        throw DataError("netpbm: bad " + std::string(what) + " in " + file.string());
    }
    return static_cast<int>(v);
}

// Simple shell glob: '*' matches any run, '?' any single character.
bool glob_match(const std::string& pattern, const std::string& name) {
    std::size_t p = 0, n = 0;
    std::size_t star = std::string::npos, star_n = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_n = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++star_n;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

}  // namespace

Frame load_netpbm(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw DataError("netpbm: cannot open " + file.string());
    }
    const std::string magic = next_token(in, file);
    int channels;
    if (magic == "P6") {
        channels = 3;
    } else if (magic == "P5") {
        channels = 1;
    } else {
        throw DataError("netpbm: unsupported magic '" + magic + "' in " + file.string());
    }
    const int width = parse_positive(next_token(in, file), file, "width");
    const int height = parse_positive(next_token(in, file), file, "height");
    const int maxval = parse_positive(next_token(in, file), file, "maxval");
    if (maxval != 255) {
        throw DataError("netpbm: maxval must be 255 in " + file.string());
    }
    // exactly one whitespace byte separates the header from the raster
    Frame frame = make_frame(width, height, channels);
    in.read(reinterpret_cast<char*>(frame.data.data()),
            static_cast<std::streamsize>(frame.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(frame.data.size())) {
        throw DataError("netpbm: truncated raster in " + file.string());
    }
    return frame;
}

void save_netpbm(const Frame& frame, const fs::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw DataError("netpbm: cannot write " + file.string());
    }
    out << (frame.channels == 3 ? "P6" : "P5") << "\n"
        << frame.width << " " << frame.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.data.data()),
              static_cast<std::streamsize>(frame.data.size()));
    if (!out) {
        throw DataError("netpbm: write failed for " + file.string());
    }
}

Clip load_frame_sequence(const fs::path& directory, const std::string& pattern) {
    if (!fs::is_directory(directory)) {
        throw DataError("load_frame_sequence: not a directory: " + directory.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file() && glob_match(pattern, entry.path().filename().string())) {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw DataError("load_frame_sequence: no files matching '" + pattern + "' in " +
                        directory.string());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    Clip clip;
    clip.source_id = directory.filename().string();
    clip.frames.reserve(files.size());
    for (const auto& f : files) {
        Frame frame = load_netpbm(f);
        if (!clip.frames.empty()) {
            const Frame& first = clip.frames.front();
            if (frame.width != first.width || frame.height != first.height ||
                frame.channels != first.channels) {
                throw DataError("load_frame_sequence: dimension mismatch at " + f.string());
            }
        }
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

Frame rescale(const Frame& frame, int target_width, int target_height) {
    if (target_width <= 0 || target_height <= 0) {
        throw DataError("rescale: target dimensions must be positive");
    }
    if (frame.width == target_width && frame.height == target_height) {
        return frame;
    }
    Frame out = make_frame(target_width, target_height, frame.channels);
    for (int y = 0; y < target_height; ++y) {
        const int sy = static_cast<int>(static_cast<std::int64_t>(y) * frame.height / target_height);
        for (int x = 0; x < target_width; ++x) {
            const int sx = static_cast<int>(static_cast<std::int64_t>(x) * frame.width / target_width);
            for (int c = 0; c < frame.channels; ++c) {
                out.at(x, y, c) = frame.at(sx, sy, c);
            }
        }
    }
    return out;
}

std::vector<ClipWindow> windows(const Clip& clip, int length, int stride) {
    if (length <= 0 || stride <= 0) {
        throw DataError("windows: length and stride must be positive");
    }
    if (clip.size() < static_cast<std::size_t>(length)) {
        std::ostringstream msg;
        msg << "windows: clip of " << clip.size() << " frames is shorter than one window of "
            << length;
        throw DataError(msg.str());
    }
    std::vector<ClipWindow> out;
    for (int start = 0; start + length <= static_cast<int>(clip.size()); start += stride) {
        out.push_back(ClipWindow{&clip, start, length});
    }
    return out;
}

}  // namespace flamedet
