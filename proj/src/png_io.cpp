#include "ocrforge/png_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "ocrforge/errors.hpp"

namespace ocrforge {

namespace {

constexpr int kZlibLevel = 6;
constexpr std::uint8_t kSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) |
           (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* data, std::size_t len) {
    put_u32(out, static_cast<std::uint32_t>(len));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    if (len) out.insert(out.end(), data, data + len);
    const auto crc = crc32(0L, out.data() + start, static_cast<uInt>(len + 4));
    put_u32(out, static_cast<std::uint32_t>(crc));
}

std::vector<std::uint8_t> deflate_buffer(const std::vector<std::uint8_t>& raw) {
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> out(bound);
    if (compress2(out.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  kZlibLevel) != Z_OK) {
        raise(Errc::io_failure, "png: zlib compression failed");
    }
    out.resize(bound);
    return out;
}

std::vector<std::uint8_t> encode_impl(std::uint32_t w, std::uint32_t h,
                                      int channels,
                                      const std::uint8_t* pixels) {
    std::vector<std::uint8_t> out(kSignature, kSignature + 8);

    std::uint8_t ihdr[13];
    ihdr[0] = static_cast<std::uint8_t>(w >> 24);
    ihdr[1] = static_cast<std::uint8_t>(w >> 16);
    ihdr[2] = static_cast<std::uint8_t>(w >> 8);
    ihdr[3] = static_cast<std::uint8_t>(w);
    ihdr[4] = static_cast<std::uint8_t>(h >> 24);
    ihdr[5] = static_cast<std::uint8_t>(h >> 16);
    ihdr[6] = static_cast<std::uint8_t>(h >> 8);
    ihdr[7] = static_cast<std::uint8_t>(h);
    ihdr[8] = 8;                                        // bit depth
    ihdr[9] = channels == 3 ? 2 : 0;                    // color type
    ihdr[10] = 0;                                       // compression
    ihdr[11] = 0;                                       // filter method
    ihdr[12] = 0;                                       // no interlace
    append_chunk(out, "IHDR", ihdr, 13);

    const std::size_t stride = static_cast<std::size_t>(w) * channels;
    std::vector<std::uint8_t> raw;
    raw.reserve((stride + 1) * h);
    for (std::uint32_t y = 0; y < h; ++y) {
        raw.push_back(0); // filter type None
        raw.insert(raw.end(), pixels + y * stride, pixels + (y + 1) * stride);
    }
    const std::vector<std::uint8_t> idat = deflate_buffer(raw);
    append_chunk(out, "IDAT", idat.data(), idat.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

struct DecodedPng {
    std::uint32_t width = 0, height = 0;
    int channels = 0; // 1, 2, 3 or 4 after unfiltering
    std::vector<std::uint8_t> data;
};

DecodedPng decode_impl(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0) {
        raise(Errc::io_failure, "png: bad signature");
    }
    std::uint32_t w = 0, h = 0;
    int bit_depth = 0, color_type = -1, interlace = 0;
    std::vector<std::uint8_t> idat;

    std::size_t pos = 8;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t len = get_u32(bytes.data() + pos);
        if (pos + 12 + len > bytes.size()) {
            raise(Errc::io_failure, "png: truncated chunk");
        }
        const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
        const std::uint8_t* data = bytes.data() + pos + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) raise(Errc::io_failure, "png: bad IHDR");
            w = get_u32(data);
            h = get_u32(data + 4);
            bit_depth = data[8];
            color_type = data[9];
            interlace = data[12];
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + len;
    }
    if (w == 0 || h == 0) raise(Errc::io_failure, "png: missing IHDR");
    if (bit_depth != 8) raise(Errc::io_failure, "png: only 8-bit supported");
    if (interlace != 0) raise(Errc::io_failure, "png: interlacing unsupported");

    int channels = 0;
    switch (color_type) {
    case 0: channels = 1; break;
    case 2: channels = 3; break;
    case 4: channels = 2; break;
    case 6: channels = 4; break;
    default:
        raise(Errc::io_failure, "png: unsupported color type");
    }

    const std::size_t stride = static_cast<std::size_t>(w) * channels;
    const std::size_t raw_size = (stride + 1) * h;
    std::vector<std::uint8_t> raw(raw_size);
    uLongf dlen = static_cast<uLongf>(raw_size);
    if (uncompress(raw.data(), &dlen, idat.data(),
                   static_cast<uLong>(idat.size())) != Z_OK ||
        dlen != raw_size) {
        raise(Errc::io_failure, "png: inflate failed");
    }

    DecodedPng out;
    out.width = w;
    out.height = h;
    out.channels = channels;
    out.data.resize(stride * h);
    const int bpp = channels;
    for (std::uint32_t y = 0; y < h; ++y) {
        const std::uint8_t filter = raw[y * (stride + 1)];
        const std::uint8_t* src = raw.data() + y * (stride + 1) + 1;
        std::uint8_t* dst = out.data.data() + y * stride;
        const std::uint8_t* up = y ? out.data.data() + (y - 1) * stride : nullptr;
        for (std::size_t x = 0; x < stride; ++x) {
            const int a = x >= static_cast<std::size_t>(bpp) ? dst[x - bpp] : 0;
            const int b = up ? up[x] : 0;
            const int c = (up && x >= static_cast<std::size_t>(bpp))
                              ? up[x - bpp] : 0;
            int v = src[x];
            switch (filter) {
            case 0: break;
            case 1: v += a; break;
            case 2: v += b; break;
            case 3: v += (a + b) / 2; break;
            case 4: v += paeth(a, b, c); break;
            default:
                raise(Errc::io_failure, "png: bad filter type");
            }
            dst[x] = static_cast<std::uint8_t>(v & 0xFF);
        }
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::io_failure, "cannot open file for write: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Errc::io_failure, "short write: " + path);
}

} // namespace

std::vector<std::uint8_t> png_encode_rgb(const RasterImage& img) {
    return encode_impl(img.width(), img.height(), 3, img.pixels().data());
}

std::vector<std::uint8_t> png_encode_gray(const AlphaMask& mask) {
    return encode_impl(mask.width(), mask.height(), 1, mask.values().data());
}

RasterImage png_decode_rgb(const std::vector<std::uint8_t>& bytes) {
    const DecodedPng d = decode_impl(bytes);
    RasterImage img(d.width, d.height);
    const std::size_t n = static_cast<std::size_t>(d.width) * d.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* s = d.data.data() + i * d.channels;
        std::uint8_t* p = img.pixels().data() + i * 3;
        switch (d.channels) {
        case 1: case 2: p[0] = p[1] = p[2] = s[0]; break;
        default: p[0] = s[0]; p[1] = s[1]; p[2] = s[2]; break;
        }
    }
    return img;
}

AlphaMask png_decode_gray(const std::vector<std::uint8_t>& bytes) {
    const DecodedPng d = decode_impl(bytes);
    AlphaMask mask(d.width, d.height);
    const std::size_t n = static_cast<std::size_t>(d.width) * d.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* s = d.data.data() + i * d.channels;
        mask.values()[i] =
            d.channels >= 3
                ? static_cast<std::uint8_t>(luma(s[0], s[1], s[2]))
                : s[0];
    }
    return mask;
}

void write_png_rgb(const std::string& path, const RasterImage& img) {
    write_file(path, png_encode_rgb(img));
}

void write_png_gray(const std::string& path, const AlphaMask& mask) {
    write_file(path, png_encode_gray(mask));
}

RasterImage read_png_rgb(const std::string& path) {
    return png_decode_rgb(read_file(path));
}

AlphaMask read_png_gray(const std::string& path) {
    return png_decode_gray(read_file(path));
}

RasterImage read_ppm(const std::string& path) {
    const std::vector<std::uint8_t> bytes = read_file(path);
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < bytes.size()) {
            if (std::isspace(bytes[pos])) { ++pos; continue; }
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        std::string tok;
        while (pos < bytes.size() && !std::isspace(bytes[pos])) {
            tok.push_back(static_cast<char>(bytes[pos++]));
        }
        return tok;
    };
    if (next_token() != "P6") raise(Errc::io_failure, "ppm: not a P6 file");
    const std::string ws = next_token(), hs = next_token(), ms = next_token();
    long w = 0, h = 0, maxval = 0;
    try {
        w = std::stol(ws);
        h = std::stol(hs);
        maxval = std::stol(ms);
    } catch (...) {
        raise(Errc::io_failure, "ppm: malformed header");
    }
    if (w < 1 || h < 1 || maxval != 255) {
        raise(Errc::io_failure, "ppm: unsupported dimensions or maxval");
    }
    ++pos; // single whitespace after maxval
    const std::size_t need = static_cast<std::size_t>(w) * h * 3;
    if (bytes.size() - pos < need) raise(Errc::io_failure, "ppm: truncated data");
    RasterImage img(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h));
    std::memcpy(img.pixels().data(), bytes.data() + pos, need);
    return img;
}

RasterImage read_image_any(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".ppm") return read_ppm(path);
    return read_png_rgb(path);
}

} // namespace ocrforge
