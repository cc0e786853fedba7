#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "refkit/errors.hpp"

namespace refkit {

/// 2-D grid of normalized reflectance values in [0,1], row-major.
/// 16-bit sources are mapped as value = dn / 65535.
class ImageGrid {
public:
    ImageGrid() = default;

    ImageGrid(int width, int height, double fill = 0.0)
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("ImageGrid: width and height must be >= 1");
        values_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    /// Adopts an existing row-major value buffer; checks the shape/finiteness
    /// invariants that raw buffers cannot guarantee on their own.
    static ImageGrid from_values(int width, int height, std::vector<double> values) {
        if (width < 1 || height < 1)
            throw InvalidArgument("ImageGrid: width and height must be >= 1");
        if (values.size() != static_cast<std::size_t>(width) * height)
            throw DimensionMismatch("ImageGrid: buffer size does not match width*height");
        for (double v : values)
            if (!std::isfinite(v))
                throw InvalidArgument("ImageGrid: values must be finite");
        ImageGrid img;
        img.width_ = width;
        img.height_ = height;
        img.values_ = std::move(values);
        return img;
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    double operator()(int x, int y) const noexcept { return values_[index(x, y)]; }
    double& operator()(int x, int y) noexcept { return values_[index(x, y)]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    bool in_bounds(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    bool same_shape(const ImageGrid& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const ImageGrid& a, const ImageGrid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.values_ == b.values_;
    }

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

/// Per-pixel clear/obscured indicator paired with an ImageGrid of the same shape.
class StatusMap {
public:
    StatusMap() = default;

    StatusMap(int width, int height, bool clear = true)
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("StatusMap: width and height must be >= 1");
        clear_.assign(static_cast<std::size_t>(width) * height, clear ? 1 : 0);
    }

    static StatusMap from_flags(int width, int height, std::vector<std::uint8_t> flags) {
        if (width < 1 || height < 1)
            throw InvalidArgument("StatusMap: width and height must be >= 1");
        if (flags.size() != static_cast<std::size_t>(width) * height)
            throw DimensionMismatch("StatusMap: buffer size does not match width*height");
        StatusMap m;
        m.width_ = width;
        m.height_ = height;
        m.clear_ = std::move(flags);
        return m;
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return clear_.size(); }
    bool empty() const noexcept { return clear_.empty(); }

    bool clear(int x, int y) const noexcept { return clear_[index(x, y)] != 0; }
    void set_clear(int x, int y, bool value) noexcept { clear_[index(x, y)] = value ? 1 : 0; }

    std::span<const std::uint8_t> flags() const noexcept { return clear_; }

    bool in_bounds(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    bool same_shape(const StatusMap& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    bool same_shape(const ImageGrid& img) const noexcept {
        return width_ == img.width() && height_ == img.height();
    }

    std::size_t clear_count() const noexcept {
        std::size_t n = 0;
        for (std::uint8_t f : clear_) n += (f != 0);
        return n;
    }

    friend bool operator==(const StatusMap& a, const StatusMap& b) {
        if (a.width_ != b.width_ || a.height_ != b.height_) return false;
        for (std::size_t i = 0; i < a.clear_.size(); ++i)
            if ((a.clear_[i] != 0) != (b.clear_[i] != 0)) return false;
        return true;
    }

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> clear_;
};

/// Sub-pixel translation. Convention: warping an image by (dx,dy) produces
/// output(x,y) = input(x+dx, y+dy), with pixel centers at integer coordinates.
struct Translation {
    double dx = 0.0;
    double dy = 0.0;

    bool finite() const noexcept { return std::isfinite(dx) && std::isfinite(dy); }

    Translation operator-() const noexcept { return {-dx, -dy}; }

    friend Translation operator+(Translation a, Translation b) noexcept {
        return {a.dx + b.dx, a.dy + b.dy};
    }
    friend Translation operator-(Translation a, Translation b) noexcept {
        return {a.dx - b.dx, a.dy - b.dy};
    }
};

/// Largest translation magnitude accepted per axis unless a caller widens it.
inline constexpr double kDefaultSearchBound = 10.0;

/// 16-bit quantization step of the on-disk encoding.
inline constexpr double kQuantum = 1.0 / 65535.0;

inline double clamp01(double v) noexcept {
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

/// Snaps a value onto the 16-bit reflectance grid (what the dataset encoding stores).
inline double quantize16(double v) noexcept {
    return std::round(clamp01(v) * 65535.0) / 65535.0;
}

}  // namespace refkit
