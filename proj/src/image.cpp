#include "ard/image.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ard {

namespace {

// Reads one header token, skipping whitespace and '#' comment lines.
std::string next_token(const Bytes& data, std::size_t& pos) {
    while (pos < data.size()) {
        if (std::isspace(data[pos])) {
            ++pos;
        } else if (data[pos] == '#') {
            while (pos < data.size() && data[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    std::string token;
    while (pos < data.size() && !std::isspace(data[pos])) token.push_back(static_cast<char>(data[pos++]));
    return token;
}

std::uint32_t parse_number(const std::string& token) {
    if (token.empty()) throw std::runtime_error("malformed PGM header: missing field");
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::runtime_error("malformed PGM header: expected number, got '" + token + "'");
    return static_cast<std::uint32_t>(std::stoul(token));
}

}  // namespace

ImageGrid load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::size_t pos = 0;
    const std::string magic = next_token(data, pos);
    if (magic != "P5") {
        if (magic == "P2")
            throw std::runtime_error("ASCII PGM (P2) not supported; only binary P5");
        throw std::runtime_error("malformed PGM header: bad magic '" + magic + "'");
    }
    ImageGrid grid;
    grid.width = parse_number(next_token(data, pos));
    grid.height = parse_number(next_token(data, pos));
    const std::uint32_t maxval = parse_number(next_token(data, pos));
    if (maxval != 255)
        throw std::runtime_error("unsupported maxval " + std::to_string(maxval) + " (only 255)");
    if (pos >= data.size() || !std::isspace(data[pos]))
        throw std::runtime_error("malformed PGM header: missing separator");
    ++pos;  // exactly one whitespace byte before the payload

    const std::size_t expected = static_cast<std::size_t>(grid.width) * grid.height;
    if (data.size() - pos < expected) throw std::runtime_error("truncated PGM payload");
    grid.pixels.assign(data.begin() + pos, data.begin() + pos + expected);
    return grid;
}

void save_pgm(const ImageGrid& grid, const std::filesystem::path& path) {
    if (grid.pixels.size() != static_cast<std::size_t>(grid.width) * grid.height)
        throw std::invalid_argument("save_pgm: pixel count does not match dimensions");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "P5\n" << grid.width << ' ' << grid.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(grid.pixels.data()),
              static_cast<std::streamsize>(grid.pixels.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ImageGrid naive_denoise(const ImageGrid& grid) {
    for (std::uint8_t p : grid.pixels)
        if (p != 0 && p != 255)
            throw std::invalid_argument("naive_denoise: image is not monochrome");

    const int w = static_cast<int>(grid.width);
    const int h = static_cast<int>(grid.height);
    ImageGrid out = grid;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::uint8_t center = grid.pixels[static_cast<std::size_t>(y) * w + x];
            int differing = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    if (grid.pixels[static_cast<std::size_t>(ny) * w + nx] != center) ++differing;
                }
            }
            if (differing >= 5)
                out.pixels[static_cast<std::size_t>(y) * w + x] = static_cast<std::uint8_t>(255 - center);
        }
    }
    return out;
}

}  // namespace ard
