#include "ocrforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ocrforge/errors.hpp"

namespace ocrforge {

namespace {

// Segment intersection test for the self-intersection check. Touching
// endpoints do not count as crossing.
int orient(const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

} // namespace

double Quad::signed_area() const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Point& p = corners[i];
        const Point& q = corners[(i + 1) & 3];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

bool Quad::valid() const {
    for (const Point& p : corners) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    }
    if (signed_area() <= 0.0) return false;
    // opposite edges must not cross
    return !segments_cross(corners[0], corners[1], corners[2], corners[3]) &&
           !segments_cross(corners[1], corners[2], corners[3], corners[0]);
}

Point Quad::bbox_min() const {
    Point m = corners[0];
    for (int i = 1; i < 4; ++i) {
        m.x = std::min(m.x, corners[i].x);
        m.y = std::min(m.y, corners[i].y);
    }
    return m;
}

Point Quad::bbox_max() const {
    Point m = corners[0];
    for (int i = 1; i < 4; ++i) {
        m.x = std::max(m.x, corners[i].x);
        m.y = std::max(m.y, corners[i].y);
    }
    return m;
}

void Homography::normalize() {
    if (m_[8] != 0.0) {
        const double inv = 1.0 / m_[8];
        for (double& v : m_) v *= inv;
        m_[8] = 1.0;
    }
}

Homography Homography::rotation_about(double radians, double cx, double cy) {
    const double c = std::cos(radians), s = std::sin(radians);
    // T(cx,cy) * R * T(-cx,-cy), composed analytically
    return Homography({c, -s, cx - c * cx + s * cy,
                       s, c, cy - s * cx - c * cy,
                       0, 0, 1});
}

double Homography::det() const {
    return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) -
           m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
           m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
}

Homography Homography::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) {
        raise(Errc::degenerate_quad, "homography is not invertible");
    }
    const double inv = 1.0 / d;
    std::array<double, 9> a;
    a[0] = (m_[4] * m_[8] - m_[5] * m_[7]) * inv;
    a[1] = (m_[2] * m_[7] - m_[1] * m_[8]) * inv;
    a[2] = (m_[1] * m_[5] - m_[2] * m_[4]) * inv;
    a[3] = (m_[5] * m_[6] - m_[3] * m_[8]) * inv;
    a[4] = (m_[0] * m_[8] - m_[2] * m_[6]) * inv;
    a[5] = (m_[2] * m_[3] - m_[0] * m_[5]) * inv;
    a[6] = (m_[3] * m_[7] - m_[4] * m_[6]) * inv;
    a[7] = (m_[1] * m_[6] - m_[0] * m_[7]) * inv;
    a[8] = (m_[0] * m_[4] - m_[1] * m_[3]) * inv;
    return Homography(a);
}

bool Homography::is_identity(double tol) const {
    static constexpr std::array<double, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (int i = 0; i < 9; ++i) {
        if (std::abs(m_[i] - id[i]) > tol) return false;
    }
    return true;
}

Homography homography_from_quads(const Quad& src, const Quad& dst) {
    // 8x8 system A m = b for m = (m0..m7), m8 = 1:
    //   x' = (m0 x + m1 y + m2) / (m6 x + m7 y + 1)
    //   y' = (m3 x + m4 y + m5) / (m6 x + m7 y + 1)
    double a[8][9] = {};
    for (int i = 0; i < 4; ++i) {
        const double x = src.corners[i].x, y = src.corners[i].y;
        const double u = dst.corners[i].x, v = dst.corners[i].y;
        double* r0 = a[2 * i];
        double* r1 = a[2 * i + 1];
        r0[0] = x; r0[1] = y; r0[2] = 1; r0[6] = -u * x; r0[7] = -u * y; r0[8] = u;
        r1[3] = x; r1[4] = y; r1[5] = 1; r1[6] = -v * x; r1[7] = -v * y; r1[8] = v;
    }

    // Gaussian elimination with partial pivoting
    for (int col = 0; col < 8; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 8; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-12) {
            raise(Errc::degenerate_quad,
                  "homography_from_quads: singular system (collinear corners)");
        }
        if (pivot != col) std::swap(a[pivot], a[col]);
        const double inv = 1.0 / a[col][col];
        for (int r = col + 1; r < 8; ++r) {
            const double f = a[r][col] * inv;
            if (f == 0.0) continue;
            for (int c = col; c < 9; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::array<double, 9> m;
    m[8] = 1.0;
    for (int r = 7; r >= 0; --r) {
        double v = a[r][8];
        for (int c = r + 1; c < 8; ++c) v -= a[r][c] * m[c];
        m[r] = v / a[r][r];
    }
    return Homography(m);
}

Point apply_point(const Homography& h, const Point& p) {
    const double w = h[6] * p.x + h[7] * p.y + h[8];
    if (std::abs(w) < 1e-12) {
        raise(Errc::point_at_infinity, "apply_point: point maps to infinity");
    }
    return {(h[0] * p.x + h[1] * p.y + h[2]) / w,
            (h[3] * p.x + h[4] * p.y + h[5]) / w};
}

Quad apply_quad(const Homography& h, const Quad& q) {
    Quad out;
    for (int i = 0; i < 4; ++i) out.corners[i] = apply_point(h, q.corners[i]);
    return out;
}

Homography compose(const Homography& a, const Homography& b) {
    std::array<double, 9> m{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k) v += a[3 * i + k] * b[3 * k + j];
            m[3 * i + j] = v;
        }
    }
    return Homography(m);
}

namespace {

// Snap near-integer sample offsets so exact geometric identities stay
// lossless at image borders.
inline double snap(double v) {
    const double r = std::round(v);
    return std::abs(v - r) < 1e-9 ? r : v;
}

} // namespace

RasterImage warp_image(const RasterImage& img, const Homography& h,
                       std::uint32_t out_w, std::uint32_t out_h, Rgb fill) {
    const Homography inv = h.inverse();
    RasterImage out(out_w, out_h, fill);
    const int sw = static_cast<int>(img.width());
    const int sh = static_cast<int>(img.height());

    for (std::uint32_t y = 0; y < out_h; ++y) {
        for (std::uint32_t x = 0; x < out_w; ++x) {
            const double px = x + 0.5, py = y + 0.5;
            const double w = inv[6] * px + inv[7] * py + inv[8];
            if (std::abs(w) < 1e-12) continue; // fill stays
            const double sx = (inv[0] * px + inv[1] * py + inv[2]) / w;
            const double sy = (inv[3] * px + inv[4] * py + inv[5]) / w;

            const double u = snap(sx - 0.5), v = snap(sy - 0.5);
            const double fx = u - std::floor(u), fy = v - std::floor(v);
            const int x0 = static_cast<int>(std::floor(u));
            const int y0 = static_cast<int>(std::floor(v));
            const int x1 = x0 + 1, y1 = y0 + 1;

            const bool need_x1 = fx > 0.0, need_y1 = fy > 0.0;
            if (x0 < 0 || y0 < 0 || x0 >= sw || y0 >= sh ||
                (need_x1 && x1 >= sw) || (need_y1 && y1 >= sh)) {
                continue;
            }

            const std::uint8_t* p00 = img.at(x0, y0);
            const std::uint8_t* p10 = need_x1 ? img.at(x1, y0) : p00;
            const std::uint8_t* p01 = need_y1 ? img.at(x0, y1) : p00;
            const std::uint8_t* p11 =
                (need_x1 && need_y1) ? img.at(x1, y1) : p00;

            std::uint8_t* o = out.at(x, y);
            for (int c = 0; c < 3; ++c) {
                const double top = p00[c] * (1.0 - fx) + p10[c] * fx;
                const double bot = p01[c] * (1.0 - fx) + p11[c] * fx;
                o[c] = to_u8(top * (1.0 - fy) + bot * fy);
            }
        }
    }
    return out;
}

AlphaMask warp_mask(const AlphaMask& mask, const Homography& h,
                    std::uint32_t out_w, std::uint32_t out_h) {
    const Homography inv = h.inverse();
    AlphaMask out(out_w, out_h, 0);
    const int sw = static_cast<int>(mask.width());
    const int sh = static_cast<int>(mask.height());

    for (std::uint32_t y = 0; y < out_h; ++y) {
        for (std::uint32_t x = 0; x < out_w; ++x) {
            const double px = x + 0.5, py = y + 0.5;
            const double w = inv[6] * px + inv[7] * py + inv[8];
            if (std::abs(w) < 1e-12) continue;
            const double sx = (inv[0] * px + inv[1] * py + inv[2]) / w;
            const double sy = (inv[3] * px + inv[4] * py + inv[5]) / w;

            const double u = snap(sx - 0.5), v = snap(sy - 0.5);
            const double fx = u - std::floor(u), fy = v - std::floor(v);
            const int x0 = static_cast<int>(std::floor(u));
            const int y0 = static_cast<int>(std::floor(v));
            const int x1 = x0 + 1, y1 = y0 + 1;

            const bool need_x1 = fx > 0.0, need_y1 = fy > 0.0;
            if (x0 < 0 || y0 < 0 || x0 >= sw || y0 >= sh ||
                (need_x1 && x1 >= sw) || (need_y1 && y1 >= sh)) {
                continue;
            }
            const double a00 = mask.at(x0, y0);
            const double a10 = need_x1 ? mask.at(x1, y0) : a00;
            const double a01 = need_y1 ? mask.at(x0, y1) : a00;
            const double a11 = (need_x1 && need_y1) ? mask.at(x1, y1) : a00;
            const double top = a00 * (1.0 - fx) + a10 * fx;
            const double bot = a01 * (1.0 - fx) + a11 * fx;
            out.set(x, y, to_u8(top * (1.0 - fy) + bot * fy));
        }
    }
    return out;
}

void alpha_blend_into(RasterImage& dst, const RasterImage& src,
                      const AlphaMask& mask, int ox, int oy) {
    const int dw = static_cast<int>(dst.width());
    const int dh = static_cast<int>(dst.height());
    const int sw = static_cast<int>(src.width());
    const int sh = static_cast<int>(src.height());

    const int x0 = std::max(0, ox), y0 = std::max(0, oy);
    const int x1 = std::min(dw, ox + sw), y1 = std::min(dh, oy + sh);

    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const unsigned a = mask.at(x - ox, y - oy);
            if (a == 0) continue;
            const std::uint8_t* s = src.at(x - ox, y - oy);
            std::uint8_t* d = dst.at(x, y);
            for (int c = 0; c < 3; ++c) {
                // no exact .5 ties exist mod 255, so +127 rounds correctly
                const unsigned v = a * s[c] + (255 - a) * d[c];
                d[c] = static_cast<std::uint8_t>((v + 127) / 255);
            }
        }
    }
}

RasterImage alpha_blend(const RasterImage& dst, const RasterImage& src,
                        const AlphaMask& mask, Point origin) {
    RasterImage out = dst;
    alpha_blend_into(out, src, mask, static_cast<int>(std::lround(origin.x)),
                     static_cast<int>(std::lround(origin.y)));
    return out;
}

} // namespace ocrforge
