#pragma once

#include <string>

#include "shoulderx/image.hpp"

namespace shoulderx {

/// Decodes a png into an 8-bit 3-channel RGB buffer. Gray, palette, 16-bit
/// and alpha variants are converted on the fly. Throws ValidationError on
/// unreadable or non-png input.
ImageBuffer read_png_rgb8(const std::string& path);

/// Encodes a 1- or 3-channel 8-bit buffer as png (gray / RGB). Writes via
/// temp file + rename.
void write_png(const std::string& path, const ImageBuffer& image);

} // namespace shoulderx
