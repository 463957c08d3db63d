#pragma once

#include <cstdint>
#include <filesystem>

#include "ard/bytes.hpp"

namespace ard {

// Row-major 8-bit grayscale grid; intensities run from 0 (black) to 255
// (white). The compressor only ever sees the raw pixel bytes; width and
// height travel next to them.
struct ImageGrid {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    Bytes pixels;
};

// Binary PGM ("P5", maxval 255) reader/writer. load(save(g)) is the
// identity. Rejects ASCII PGM, other maxvals, and short payloads with
// distinct messages.
ImageGrid load_pgm(const std::filesystem::path& path);
void save_pgm(const ImageGrid& grid, const std::filesystem::path& path);

// Baseline denoiser for monochrome grids (pixels in {0, 255}): one
// simultaneous pass inverting every pixel with five or more differing
// neighbours. Border pixels count only their in-bounds neighbours against the
// same threshold, so they almost never flip.
ImageGrid naive_denoise(const ImageGrid& grid);

}  // namespace ard
