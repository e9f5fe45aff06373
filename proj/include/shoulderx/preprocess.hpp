#pragma once

#include <array>
#include <cstdint>

#include "shoulderx/image.hpp"
#include "shoulderx/rng.hpp"

namespace shoulderx {

struct ClaheParams {
    int tile_rows = 8;
    int tile_cols = 8;
    double clip_limit = 2.0; // multiples of the uniform bin height; +inf disables clipping

    void validate() const;
};

/// ITU-R BT.601 luma: g = round(0.299 R + 0.587 G + 0.114 B).
ImageBuffer to_grayscale(const ImageBuffer& rgb);

std::array<std::uint64_t, 256> intensity_histogram(const ImageBuffer& gray);

/// Threshold minimizing within-class intensity variance over splits
/// (<= t | > t); the smallest t among equal optima. Comparisons are done in
/// exact integer arithmetic, so ties are resolved deterministically.
/// Throws ValidationError if fewer than two distinct bins are occupied.
int otsu_threshold(const std::array<std::uint64_t, 256>& histogram);

/// Band threshold: foreground (255) where t_low < pixel <= t_high.
ImageBuffer binarize(const ImageBuffer& gray, int t_low, int t_high);

/// Inclusive pixel rectangle.
struct PixelRect {
    int r0 = 0, c0 = 0, r1 = 0, c1 = 0;
    int height() const { return r1 - r0 + 1; }
    int width() const { return c1 - c0 + 1; }
    bool operator==(const PixelRect&) const = default;
};

/// Tightest rectangle containing all foreground pixels; a mask with no
/// foreground yields the full-image rectangle.
PixelRect foreground_bbox(const ImageBuffer& mask);

struct CropInfo {
    PixelRect rect;
    bool fallback = false; // no foreground found; rect covers the whole image
};

/// Content rectangle of a gray or RGB image: Otsu-thresholded foreground
/// bounding box expanded by `margin` pixels, clamped to the image bounds.
/// Degenerate images (uniform intensity) fall back to the full frame.
CropInfo content_crop_rect(const ImageBuffer& image, int margin = 2);

ImageBuffer crop(const ImageBuffer& image, const PixelRect& rect);

inline ImageBuffer crop_to_content(const ImageBuffer& image, int margin = 2) {
    return crop(image, content_crop_rect(image, margin).rect);
}

/// Contrast-limited adaptive histogram equalization on a gray image.
///
/// The image is padded on the bottom/right by edge replication so the tile
/// grid divides it exactly. Each tile's 256-bin histogram is clipped at
/// clip_limit * tile_pixels / 256 with the excess redistributed uniformly,
/// then turned into an equalization mapping; pixels are remapped by bilinear
/// interpolation between the four surrounding tile mappings (two at edges,
/// one at corners). With a 1x1 grid and no clipping this reduces to plain
/// global histogram equalization.
ImageBuffer clahe(const ImageBuffer& gray, const ClaheParams& params);

/// Bilinear resize with half-pixel-center alignment; same-size input comes
/// back pixel-identical.
ImageBuffer resize_bilinear(const ImageBuffer& image, int out_h, int out_w);

inline constexpr std::array<double, 3> kImagenetMean{0.485, 0.456, 0.406};
inline constexpr std::array<double, 3> kImagenetStd{0.229, 0.224, 0.225};

/// Per channel: out = (pixel/255 - mean_c) / std_c. Input must be 320x320x3.
NormalizedTensor normalize_imagenet(const ImageBuffer& rgb);

/// Inverse of normalize_imagenet on the 0..255 pixel scale, before any
/// rounding (used to check the affine map is invertible).
std::vector<double> denormalize_imagenet(const NormalizedTensor& tensor);

/// Rotation about the image center by `degrees` (counter-clockwise),
/// bilinear resampling, zero fill outside the frame, dims unchanged.
ImageBuffer rotate_about_center(const ImageBuffer& image, double degrees);

/// Draws the augmentation angle, uniform in [-max_abs_degrees, +max_abs_degrees].
double sample_rotation_degrees(Rng& rng, double max_abs_degrees = 10.0);

/// Seeded random rotation by at most +-10 degrees; deterministic per seed.
ImageBuffer rotate_augment(const ImageBuffer& image, std::uint64_t rng_seed,
                           double max_abs_degrees = 10.0);

/// Full pipeline: grayscale -> content crop -> CLAHE (gray plane replicated
/// to 3 channels) -> resize to 320x320 -> ImageNet normalization.
NormalizedTensor preprocess_pipeline(const ImageBuffer& raw, const ClaheParams& params,
                                     int margin = 2);

/// Pipeline minus normalization: the 320x320x3 8-bit image, for inspection
/// output. `info`, when given, receives the crop decision.
ImageBuffer preprocess_to_image(const ImageBuffer& raw, const ClaheParams& params,
                                int margin = 2, CropInfo* info = nullptr);

} // namespace shoulderx
