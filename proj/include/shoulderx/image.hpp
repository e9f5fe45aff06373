#pragma once

#include <cstdint>
#include <vector>

#include "shoulderx/util.hpp"

namespace shoulderx {

/// 8-bit raster, row-major, interleaved channels (1 = gray, 3 = RGB).
struct ImageBuffer {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    ImageBuffer() = default;
    ImageBuffer(int h, int w, int c, std::uint8_t fill = 0)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, fill) {
        if (h <= 0 || w <= 0 || (c != 1 && c != 3))
            throw ValidationError("ImageBuffer: invalid shape");
    }

    std::size_t index(int r, int c, int ch = 0) const {
        return (static_cast<std::size_t>(r) * width + c) * channels + ch;
    }
    std::uint8_t at(int r, int c, int ch = 0) const { return data[index(r, c, ch)]; }
    std::uint8_t& at(int r, int c, int ch = 0) { return data[index(r, c, ch)]; }

    std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
    bool same_shape(const ImageBuffer& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

/// Model-input tensor: 320x320x3, HWC interleaved RGB, values finite.
/// Stored in double so normalize/denormalize round-trips below 1e-6.
struct NormalizedTensor {
    static constexpr int kSide = 320;
    static constexpr int kChannels = 3;
    static constexpr std::size_t kElements =
        static_cast<std::size_t>(kSide) * kSide * kChannels;

    std::vector<double> data = std::vector<double>(kElements, 0.0);

    std::size_t index(int r, int c, int ch) const {
        return (static_cast<std::size_t>(r) * kSide + c) * kChannels + ch;
    }
    double at(int r, int c, int ch) const { return data[index(r, c, ch)]; }
    double& at(int r, int c, int ch) { return data[index(r, c, ch)]; }
};

} // namespace shoulderx
