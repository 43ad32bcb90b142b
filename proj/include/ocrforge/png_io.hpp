#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocrforge/image.hpp"

namespace ocrforge {

// Minimal PNG codec, enough for the formats this toolkit exchanges:
// 8-bit gray / gray+alpha / RGB / RGBA, non-interlaced. The encoder always
// writes filter 0 rows and a fixed zlib level, so identical pixels yield
// identical files.

std::vector<std::uint8_t> png_encode_rgb(const RasterImage& img);
std::vector<std::uint8_t> png_encode_gray(const AlphaMask& mask);

// Alpha channels are discarded on read (composited against nothing).
RasterImage png_decode_rgb(const std::vector<std::uint8_t>& bytes);
// Color inputs are converted through rounded BT.601 luma.
AlphaMask png_decode_gray(const std::vector<std::uint8_t>& bytes);

void write_png_rgb(const std::string& path, const RasterImage& img);
void write_png_gray(const std::string& path, const AlphaMask& mask);
RasterImage read_png_rgb(const std::string& path);
AlphaMask read_png_gray(const std::string& path);

// Binary PPM (P6), 8-bit, maxval 255.
RasterImage read_ppm(const std::string& path);

// Reads an imported background by extension (.png or .ppm).
RasterImage read_image_any(const std::string& path);

} // namespace ocrforge
