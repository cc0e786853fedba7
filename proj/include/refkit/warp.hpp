#pragma once

#include <cmath>
#include <string>

#include "refkit/image.hpp"

namespace refkit {

enum class Interp { nearest, bilinear, bicubic };

/// Warped image plus the per-pixel validity of its samples. Pixels whose
/// source position falls outside the input grid are marked invalid instead
/// of being zero-filled, so masked statistics never see padding.
struct WarpResult {
    ImageGrid image;
    StatusMap valid;
};

namespace detail {

inline double lerp(double a, double b, double f) noexcept {
    return a + f * (b - a);
}

/// Catmull-Rom weights for fractional offset f in [0,1). w[1] is the weight
/// of the sample left of the target; exact {0,1,0,0} at f = 0.
inline void catmull_rom_weights(double f, double w[4]) noexcept {
    const double f2 = f * f;
    const double f3 = f2 * f;
    w[0] = -0.5 * f3 + f2 - 0.5 * f;
    w[1] = 1.5 * f3 - 2.5 * f2 + 1.0;
    w[2] = -1.5 * f3 + 2.0 * f2 + 0.5 * f;
    w[3] = 0.5 * f3 - 0.5 * f2;
}

inline int clamp_index(int i, int n) noexcept {
    return i < 0 ? 0 : (i >= n ? n - 1 : i);
}

inline bool sample_in_bounds(const ImageGrid& img, double sx, double sy) noexcept {
    return sx >= 0.0 && sy >= 0.0 && sx <= img.width() - 1.0 && sy <= img.height() - 1.0;
}

inline double sample_nearest(const ImageGrid& img, double sx, double sy) noexcept {
    const int x = clamp_index(static_cast<int>(std::lround(sx)), img.width());
    const int y = clamp_index(static_cast<int>(std::lround(sy)), img.height());
    return img(x, y);
}

inline double sample_bilinear(const ImageGrid& img, double sx, double sy) noexcept {
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const double fx = sx - x0;
    const double fy = sy - y0;
    const int x0c = clamp_index(x0, img.width());
    const int y0c = clamp_index(y0, img.height());
    const int x1 = clamp_index(x0 + 1, img.width());
    const int y1 = clamp_index(y0 + 1, img.height());
    const double top = lerp(img(x0c, y0c), img(x1, y0c), fx);
    const double bot = lerp(img(x0c, y1), img(x1, y1), fx);
    return lerp(top, bot, fy);
}

/// Separable Catmull-Rom with replicated borders. Weights are renormalized by
/// their sum so constants survive border replication, and the result is
/// clamped to [0,1] because the kernel overshoots.
inline double sample_bicubic(const ImageGrid& img, double sx, double sy) noexcept {
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    double wx[4], wy[4];
    catmull_rom_weights(sx - x0, wx);
    catmull_rom_weights(sy - y0, wy);
    double num = 0.0;
    double wsum = 0.0;
    for (int j = 0; j < 4; ++j) {
        const int y = clamp_index(y0 - 1 + j, img.height());
        for (int i = 0; i < 4; ++i) {
            const int x = clamp_index(x0 - 1 + i, img.width());
            const double w = wx[i] * wy[j];
            num += w * img(x, y);
            wsum += w;
        }
    }
    return clamp01(num / wsum);
}

inline double sample(const ImageGrid& img, double sx, double sy, Interp interp) noexcept {
    switch (interp) {
        case Interp::nearest: return sample_nearest(img, sx, sy);
        case Interp::bilinear: return clamp01(sample_bilinear(img, sx, sy));
        case Interp::bicubic: break;
    }
    return sample_bicubic(img, sx, sy);
}

}  // namespace detail

/// Resamples img at (x+dx, y+dy) for every output pixel. Samples with no
/// source support are flagged invalid in the companion mask.
inline WarpResult warp(const ImageGrid& img, Translation t, Interp interp,
                       double search_bound = kDefaultSearchBound) {
    if (img.empty())
        throw InvalidArgument("warp: empty image");
    if (!t.finite())
        throw InvalidArgument("warp: translation must be finite");
    if (std::abs(t.dx) > search_bound || std::abs(t.dy) > search_bound)
        throw InvalidArgument("warp: translation exceeds search bound of " +
                              std::to_string(search_bound) + " px");

    WarpResult out{ImageGrid(img.width(), img.height()), StatusMap(img.width(), img.height(), false)};
    for (int y = 0; y < img.height(); ++y) {
        const double sy = y + t.dy;
        for (int x = 0; x < img.width(); ++x) {
            const double sx = x + t.dx;
            if (!detail::sample_in_bounds(img, sx, sy))
                continue;
            out.image(x, y) = detail::sample(img, sx, sy, interp);
            out.valid.set_clear(x, y, true);
        }
    }
    return out;
}

/// Nearest-neighbor warp of a status map; out-of-frame samples come back
/// obscured, which is the conservative choice for mask intersections.
inline StatusMap warp_mask_nearest(const StatusMap& m, Translation t) {
    if (!t.finite())
        throw InvalidArgument("warp_mask_nearest: translation must be finite");
    StatusMap out(m.width(), m.height(), false);
    for (int y = 0; y < m.height(); ++y) {
        const int sy = static_cast<int>(std::lround(y + t.dy));
        if (sy < 0 || sy >= m.height())
            continue;
        for (int x = 0; x < m.width(); ++x) {
            const int sx = static_cast<int>(std::lround(x + t.dx));
            if (sx < 0 || sx >= m.width())
                continue;
            out.set_clear(x, y, m.clear(sx, sy));
        }
    }
    return out;
}

}  // namespace refkit
