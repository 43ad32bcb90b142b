#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace ocrforge {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

// Single rounding rule for every float -> uint8 conversion in the project:
// round half away from zero, then clamp to [0,255].
inline std::uint8_t to_u8(double v) {
    long r = std::lround(v);
    if (r < 0) return 0;
    if (r > 255) return 255;
    return static_cast<std::uint8_t>(r);
}

// BT.601 integer luma, rounded. Used for contrast policies and thresholds.
inline int luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<int>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
}

inline int luma(const Rgb& c) { return luma(c.r, c.g, c.b); }

// Owned 8-bit RGB pixel grid, row-major, 3 bytes per pixel.
class RasterImage {
public:
    RasterImage() = default;
    RasterImage(std::uint32_t width, std::uint32_t height, Rgb fill = {0, 0, 0})
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(width) * height * 3) {
        for (std::size_t i = 0; i < pixels_.size(); i += 3) {
            pixels_[i] = fill.r;
            pixels_[i + 1] = fill.g;
            pixels_[i + 2] = fill.b;
        }
    }

    std::uint32_t width() const { return width_; }
    std::uint32_t height() const { return height_; }

    std::uint8_t* at(std::uint32_t x, std::uint32_t y) {
        return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
    }
    const std::uint8_t* at(std::uint32_t x, std::uint32_t y) const {
        return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
    }

    Rgb pixel(std::uint32_t x, std::uint32_t y) const {
        const std::uint8_t* p = at(x, y);
        return {p[0], p[1], p[2]};
    }
    void set_pixel(std::uint32_t x, std::uint32_t y, Rgb c) {
        std::uint8_t* p = at(x, y);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }

    std::vector<std::uint8_t>& pixels() { return pixels_; }
    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool empty() const { return width_ == 0 || height_ == 0; }

    bool operator==(const RasterImage&) const = default;

private:
    std::uint32_t width_ = 0, height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// Row-major uint8 coverage mask. 0 = transparent/background, 255 = opaque/text.
class AlphaMask {
public:
    AlphaMask() = default;
    AlphaMask(std::uint32_t width, std::uint32_t height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          values_(static_cast<std::size_t>(width) * height, fill) {}

    std::uint32_t width() const { return width_; }
    std::uint32_t height() const { return height_; }

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }
    void set(std::uint32_t x, std::uint32_t y, std::uint8_t v) {
        values_[static_cast<std::size_t>(y) * width_ + x] = v;
    }

    std::vector<std::uint8_t>& values() { return values_; }
    const std::vector<std::uint8_t>& values() const { return values_; }

    bool empty() const { return width_ == 0 || height_ == 0; }

    bool operator==(const AlphaMask&) const = default;

private:
    std::uint32_t width_ = 0, height_ = 0;
    std::vector<std::uint8_t> values_;
};

} // namespace ocrforge
