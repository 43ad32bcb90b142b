#pragma once

#include <array>
#include <cstdint>

#include "ocrforge/image.hpp"

namespace ocrforge {

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

// Four corners ordered top-left, top-right, bottom-right, bottom-left in
// source reading orientation. Valid quads are non-self-intersecting with
// positive signed area under that ordering (shoelace, y-down coordinates).
struct Quad {
    std::array<Point, 4> corners{};

    static Quad axis_aligned(double x, double y, double w, double h) {
        return Quad{{Point{x, y}, Point{x + w, y}, Point{x + w, y + h},
                     Point{x, y + h}}};
    }

    double signed_area() const;
    bool valid() const;

    // Axis-aligned bounding box as (min, max) points.
    Point bbox_min() const;
    Point bbox_max() const;

    bool operator==(const Quad&) const = default;
};

// Row-major 3x3 projective map, normalized so m[8] = 1 whenever m[8] != 0.
class Homography {
public:
    Homography() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}
    explicit Homography(const std::array<double, 9>& m) : m_(m) { normalize(); }

    static Homography identity() { return Homography(); }
    static Homography translation(double dx, double dy) {
        return Homography({1, 0, dx, 0, 1, dy, 0, 0, 1});
    }
    static Homography scaling(double sx, double sy) {
        return Homography({sx, 0, 0, 0, sy, 0, 0, 0, 1});
    }
    // Rotation by `radians` about (cx, cy), y-down screen coordinates.
    static Homography rotation_about(double radians, double cx, double cy);

    double operator[](std::size_t i) const { return m_[i]; }
    const std::array<double, 9>& data() const { return m_; }

    double det() const;
    Homography inverse() const;
    bool is_identity(double tol = 0.0) const;

private:
    void normalize();
    std::array<double, 9> m_;
};

// Solves the 4-point direct linear system (8 equations, 8 unknowns, m[8]=1)
// by Gaussian elimination with partial pivoting.
// Throws Errc::degenerate_quad when the system is singular.
Homography homography_from_quads(const Quad& src, const Quad& dst);

// Throws Errc::point_at_infinity when the projective denominator vanishes.
Point apply_point(const Homography& h, const Point& p);

Quad apply_quad(const Homography& h, const Quad& q);

// compose(a, b) applies b first, then a.
Homography compose(const Homography& a, const Homography& b);

// Inverse-mapping warp. Each output pixel center (x+0.5, y+0.5) is pulled
// through h^-1 and bilinearly sampled between the four surrounding source
// pixel centers; samples needing a pixel outside the source produce `fill`.
// Fractional offsets within 1e-9 of an integer snap to it, so identity and
// integer translations are lossless.
RasterImage warp_image(const RasterImage& img, const Homography& h,
                       std::uint32_t out_w, std::uint32_t out_h, Rgb fill);

// Same sampling rules for a single-channel mask; outside-source samples are 0.
AlphaMask warp_mask(const AlphaMask& mask, const Homography& h,
                    std::uint32_t out_w, std::uint32_t out_h);

// Per channel over the overlap rectangle:
//   out = round((alpha * src + (255 - alpha) * dst) / 255)
// Pixels outside the overlap are bit-exact copies of dst. `origin` is the
// integer position of src's top-left corner in dst coordinates.
RasterImage alpha_blend(const RasterImage& dst, const RasterImage& src,
                        const AlphaMask& mask, Point origin);

// In-place variant used by the render/translate hot paths.
void alpha_blend_into(RasterImage& dst, const RasterImage& src,
                      const AlphaMask& mask, int ox, int oy);

} // namespace ocrforge
