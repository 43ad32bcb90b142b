#include "ocrforge/glyphs.hpp"

#include <array>
#include <cstring>
#include <map>

namespace ocrforge {

namespace {

constexpr std::uint32_t kCellW = 8;
constexpr std::uint32_t kCellH = 16;
constexpr std::uint32_t kAscent = 12;
constexpr std::uint32_t kDescent = 4;
// 5x7 art is drawn at column 1, rows 5..11 (bottom row resting on the
// baseline); descender glyphs shift down 3 rows.
constexpr int kArtX = 1;
constexpr int kArtY = 5;
constexpr int kDescShift = 3;

struct Art {
    char ch;
    bool descender;
    const char* rows[7]; // 5 chars each, '1' = ink
};

// clang-format off
const Art kAscii[] = {
    {' ', false, {"00000","00000","00000","00000","00000","00000","00000"}},
    {'!', false, {"00100","00100","00100","00100","00100","00000","00100"}},
    {'"', false, {"01010","01010","01010","00000","00000","00000","00000"}},
    {'#', false, {"01010","01010","11111","01010","11111","01010","01010"}},
    {'$', false, {"00100","01111","10100","01110","00101","11110","00100"}},
    {'%', false, {"11000","11001","00010","00100","01000","10011","00011"}},
    {'&', false, {"01100","10010","10100","01000","10101","10010","01101"}},
    {'\'',false, {"00100","00100","01000","00000","00000","00000","00000"}},
    {'(', false, {"00010","00100","01000","01000","01000","00100","00010"}},
    {')', false, {"01000","00100","00010","00010","00010","00100","01000"}},
    {'*', false, {"00000","00100","10101","01110","10101","00100","00000"}},
    {'+', false, {"00000","00100","00100","11111","00100","00100","00000"}},
    {',', false, {"00000","00000","00000","00000","00000","01100","01000"}},
    {'-', false, {"00000","00000","00000","11111","00000","00000","00000"}},
    {'.', false, {"00000","00000","00000","00000","00000","01100","01100"}},
    {'/', false, {"00001","00010","00010","00100","01000","01000","10000"}},
    {'0', false, {"01110","10001","10011","10101","11001","10001","01110"}},
    {'1', false, {"00100","01100","00100","00100","00100","00100","01110"}},
    {'2', false, {"01110","10001","00001","00010","00100","01000","11111"}},
    {'3', false, {"11111","00010","00100","00010","00001","10001","01110"}},
    {'4', false, {"00010","00110","01010","10010","11111","00010","00010"}},
    {'5', false, {"11111","10000","11110","00001","00001","10001","01110"}},
    {'6', false, {"00110","01000","10000","11110","10001","10001","01110"}},
    {'7', false, {"11111","00001","00010","00100","01000","01000","01000"}},
    {'8', false, {"01110","10001","10001","01110","10001","10001","01110"}},
    {'9', false, {"01110","10001","10001","01111","00001","00010","01100"}},
    {':', false, {"00000","01100","01100","00000","01100","01100","00000"}},
    {';', false, {"00000","01100","01100","00000","01100","00100","01000"}},
    {'<', false, {"00010","00100","01000","10000","01000","00100","00010"}},
    {'=', false, {"00000","00000","11111","00000","11111","00000","00000"}},
    {'>', false, {"01000","00100","00010","00001","00010","00100","01000"}},
    {'?', false, {"01110","10001","00001","00010","00100","00000","00100"}},
    {'@', false, {"01110","10001","00001","01101","10101","10101","01110"}},
    {'A', false, {"01110","10001","10001","10001","11111","10001","10001"}},
    {'B', false, {"11110","10001","10001","11110","10001","10001","11110"}},
    {'C', false, {"01110","10001","10000","10000","10000","10001","01110"}},
    {'D', false, {"11100","10010","10001","10001","10001","10010","11100"}},
    {'E', false, {"11111","10000","10000","11110","10000","10000","11111"}},
    {'F', false, {"11111","10000","10000","11110","10000","10000","10000"}},
    {'G', false, {"01110","10001","10000","10111","10001","10001","01111"}},
    {'H', false, {"10001","10001","10001","11111","10001","10001","10001"}},
    {'I', false, {"01110","00100","00100","00100","00100","00100","01110"}},
    {'J', false, {"00111","00010","00010","00010","00010","10010","01100"}},
    {'K', false, {"10001","10010","10100","11000","10100","10010","10001"}},
    {'L', false, {"10000","10000","10000","10000","10000","10000","11111"}},
    {'M', false, {"10001","11011","10101","10101","10001","10001","10001"}},
    {'N', false, {"10001","10001","11001","10101","10011","10001","10001"}},
    {'O', false, {"01110","10001","10001","10001","10001","10001","01110"}},
    {'P', false, {"11110","10001","10001","11110","10000","10000","10000"}},
    {'Q', false, {"01110","10001","10001","10001","10101","10010","01101"}},
    {'R', false, {"11110","10001","10001","11110","10100","10010","10001"}},
    {'S', false, {"01111","10000","10000","01110","00001","00001","11110"}},
    {'T', false, {"11111","00100","00100","00100","00100","00100","00100"}},
    {'U', false, {"10001","10001","10001","10001","10001","10001","01110"}},
    {'V', false, {"10001","10001","10001","10001","10001","01010","00100"}},
    {'W', false, {"10001","10001","10001","10101","10101","10101","01010"}},
    {'X', false, {"10001","10001","01010","00100","01010","10001","10001"}},
    {'Y', false, {"10001","10001","01010","00100","00100","00100","00100"}},
    {'Z', false, {"11111","00001","00010","00100","01000","10000","11111"}},
    {'[', false, {"01110","01000","01000","01000","01000","01000","01110"}},
    {'\\',false, {"10000","01000","01000","00100","00010","00010","00001"}},
    {']', false, {"01110","00010","00010","00010","00010","00010","01110"}},
    {'^', false, {"00100","01010","10001","00000","00000","00000","00000"}},
    {'_', false, {"00000","00000","00000","00000","00000","00000","11111"}},
    {'`', false, {"01000","00100","00010","00000","00000","00000","00000"}},
    {'a', false, {"00000","00000","01110","00001","01111","10001","01111"}},
    {'b', false, {"10000","10000","11110","10001","10001","10001","11110"}},
    {'c', false, {"00000","00000","01110","10000","10000","10001","01110"}},
    {'d', false, {"00001","00001","01111","10001","10001","10001","01111"}},
    {'e', false, {"00000","00000","01110","10001","11111","10000","01110"}},
    {'f', false, {"00110","01001","01000","11100","01000","01000","01000"}},
    {'g', true,  {"01111","10001","10001","01111","00001","10001","01110"}},
    {'h', false, {"10000","10000","11110","10001","10001","10001","10001"}},
    {'i', false, {"00100","00000","01100","00100","00100","00100","01110"}},
    {'j', true,  {"00010","00000","00110","00010","00010","10010","01100"}},
    {'k', false, {"10000","10000","10010","10100","11000","10100","10010"}},
    {'l', false, {"01100","00100","00100","00100","00100","00100","01110"}},
    {'m', false, {"00000","00000","11010","10101","10101","10101","10101"}},
    {'n', false, {"00000","00000","11110","10001","10001","10001","10001"}},
    {'o', false, {"00000","00000","01110","10001","10001","10001","01110"}},
    {'p', true,  {"11110","10001","10001","11110","10000","10000","10000"}},
    {'q', true,  {"01111","10001","10001","01111","00001","00001","00001"}},
    {'r', false, {"00000","00000","10110","11001","10000","10000","10000"}},
    {'s', false, {"00000","00000","01111","10000","01110","00001","11110"}},
    {'t', false, {"01000","01000","11100","01000","01000","01001","00110"}},
    {'u', false, {"00000","00000","10001","10001","10001","10011","01101"}},
    {'v', false, {"00000","00000","10001","10001","10001","01010","00100"}},
    {'w', false, {"00000","00000","10001","10001","10101","10101","01010"}},
    {'x', false, {"00000","00000","10001","01010","00100","01010","10001"}},
    {'y', true,  {"10001","10001","10001","01111","00001","10001","01110"}},
    {'z', false, {"00000","00000","11111","00010","00100","01000","11111"}},
    {'{', false, {"00010","00100","00100","01000","00100","00100","00010"}},
    {'|', false, {"00100","00100","00100","00100","00100","00100","00100"}},
    {'}', false, {"01000","00100","00100","00010","00100","00100","01000"}},
    {'~', false, {"00000","00000","01000","10101","00010","00000","00000"}},
};
// clang-format on

enum class Accent { grave, acute, circumflex, tilde, diaeresis, ring, cedilla };

struct AccentedEntry {
    char32_t cp;
    char base;
    Accent accent;
};

// Latin-1 Supplement letters composed from a base glyph plus a mark.
const AccentedEntry kAccented[] = {
    {0xC0, 'A', Accent::grave},      {0xC1, 'A', Accent::acute},
    {0xC2, 'A', Accent::circumflex}, {0xC3, 'A', Accent::tilde},
    {0xC4, 'A', Accent::diaeresis},  {0xC5, 'A', Accent::ring},
    {0xC7, 'C', Accent::cedilla},    {0xC8, 'E', Accent::grave},
    {0xC9, 'E', Accent::acute},      {0xCA, 'E', Accent::circumflex},
    {0xCB, 'E', Accent::diaeresis},  {0xCC, 'I', Accent::grave},
    {0xCD, 'I', Accent::acute},      {0xCE, 'I', Accent::circumflex},
    {0xCF, 'I', Accent::diaeresis},  {0xD1, 'N', Accent::tilde},
    {0xD2, 'O', Accent::grave},      {0xD3, 'O', Accent::acute},
    {0xD4, 'O', Accent::circumflex}, {0xD5, 'O', Accent::tilde},
    {0xD6, 'O', Accent::diaeresis},  {0xD9, 'U', Accent::grave},
    {0xDA, 'U', Accent::acute},      {0xDB, 'U', Accent::circumflex},
    {0xDC, 'U', Accent::diaeresis},  {0xDD, 'Y', Accent::acute},
    {0xE0, 'a', Accent::grave},      {0xE1, 'a', Accent::acute},
    {0xE2, 'a', Accent::circumflex}, {0xE3, 'a', Accent::tilde},
    {0xE4, 'a', Accent::diaeresis},  {0xE5, 'a', Accent::ring},
    {0xE7, 'c', Accent::cedilla},    {0xE8, 'e', Accent::grave},
    {0xE9, 'e', Accent::acute},      {0xEA, 'e', Accent::circumflex},
    {0xEB, 'e', Accent::diaeresis},  {0xEC, 'i', Accent::grave},
    {0xED, 'i', Accent::acute},      {0xEE, 'i', Accent::circumflex},
    {0xEF, 'i', Accent::diaeresis},  {0xF1, 'n', Accent::tilde},
    {0xF2, 'o', Accent::grave},      {0xF3, 'o', Accent::acute},
    {0xF4, 'o', Accent::circumflex}, {0xF5, 'o', Accent::tilde},
    {0xF6, 'o', Accent::diaeresis},  {0xF9, 'u', Accent::grave},
    {0xFA, 'u', Accent::acute},      {0xFB, 'u', Accent::circumflex},
    {0xFC, 'u', Accent::diaeresis},  {0xFD, 'y', Accent::acute},
    {0xFF, 'y', Accent::diaeresis},
};

const char* kEszett[7] = {"01100", "10010", "10010", "10110",
                          "10001", "10001", "10110"};

using Cell = std::array<std::uint8_t, kCellW * kCellH>; // 0/1 per pixel

void draw_art(Cell& cell, const char* const rows[7], int shift_down) {
    for (int r = 0; r < 7; ++r) {
        const int y = kArtY + r + shift_down;
        if (y < 0 || y >= static_cast<int>(kCellH)) continue;
        for (int c = 0; c < 5; ++c) {
            if (rows[r][c] == '1') cell[y * kCellW + kArtX + c] = 1;
        }
    }
}

int top_ink_row(const Cell& cell) {
    for (std::uint32_t y = 0; y < kCellH; ++y) {
        for (std::uint32_t x = 0; x < kCellW; ++x) {
            if (cell[y * kCellW + x]) return static_cast<int>(y);
        }
    }
    return kCellH;
}

int bottom_ink_row(const Cell& cell) {
    for (int y = kCellH - 1; y >= 0; --y) {
        for (std::uint32_t x = 0; x < kCellW; ++x) {
            if (cell[y * kCellW + x]) return y;
        }
    }
    return -1;
}

void draw_accent(Cell& cell, Accent accent) {
    static const std::map<Accent, std::vector<const char*>> marks = {
        {Accent::grave, {"01000", "00100"}},
        {Accent::acute, {"00010", "00100"}},
        {Accent::circumflex, {"00100", "01010"}},
        {Accent::tilde, {"01101", "10110"}},
        {Accent::diaeresis, {"01010"}},
        {Accent::ring, {"00100", "01010", "00100"}},
    };
    if (accent == Accent::cedilla) {
        const int start = bottom_ink_row(cell) + 1;
        const char* rows[2] = {"00100", "01100"};
        for (int r = 0; r < 2; ++r) {
            const int y = start + r;
            if (y >= static_cast<int>(kCellH)) break;
            for (int c = 0; c < 5; ++c) {
                if (rows[r][c] == '1') cell[y * kCellW + kArtX + c] = 1;
            }
        }
        return;
    }
    const auto& rows = marks.at(accent);
    const int h = static_cast<int>(rows.size());
    int y0 = top_ink_row(cell) - 1 - h; // one blank row between mark and glyph
    if (y0 < 0) y0 = 0;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < 5; ++c) {
            if (rows[r][c] == '1') cell[(y0 + r) * kCellW + kArtX + c] = 1;
        }
    }
}

Cell make_box_glyph() {
    Cell cell{};
    for (std::uint32_t x = 0; x <= 6; ++x) {
        cell[2 * kCellW + x] = 1;
        cell[13 * kCellW + x] = 1;
    }
    for (std::uint32_t y = 2; y <= 13; ++y) {
        cell[y * kCellW + 0] = 1;
        cell[y * kCellW + 6] = 1;
    }
    return cell;
}

class BitmapFont final : public GlyphSource {
public:
    BitmapFont() {
        for (const Art& a : kAscii) {
            Cell cell{};
            draw_art(cell, a.rows, a.descender ? kDescShift : 0);
            cells_[static_cast<char32_t>(a.ch)] = cell;
        }
        for (const AccentedEntry& e : kAccented) {
            Cell cell = cells_.at(static_cast<char32_t>(e.base));
            draw_accent(cell, e.accent);
            cells_[e.cp] = cell;
        }
        {
            Cell cell{};
            draw_art(cell, kEszett, 0);
            cells_[0xDF] = cell;
        }
        box_ = make_box_glyph();
    }

    GlyphBitmap render(char32_t cp, std::uint32_t scale) const override {
        if (scale == 0) scale = 1;
        const auto it = cells_.find(cp);
        const Cell& cell = it != cells_.end() ? it->second : box_;

        AlphaMask bmp(kCellW * scale, kCellH * scale, 0);
        for (std::uint32_t y = 0; y < kCellH; ++y) {
            for (std::uint32_t x = 0; x < kCellW; ++x) {
                if (!cell[y * kCellW + x]) continue;
                for (std::uint32_t dy = 0; dy < scale; ++dy) {
                    for (std::uint32_t dx = 0; dx < scale; ++dx) {
                        bmp.set(x * scale + dx, y * scale + dy, 255);
                    }
                }
            }
        }
        return {std::move(bmp), kCellW * scale, kAscent * scale,
                kDescent * scale};
    }

    std::uint32_t cell_width(std::uint32_t scale) const override {
        return kCellW * scale;
    }
    std::uint32_t line_height(std::uint32_t scale) const override {
        return kCellH * scale;
    }
    std::uint32_t ascent(std::uint32_t scale) const override {
        return kAscent * scale;
    }
    std::uint32_t descent(std::uint32_t scale) const override {
        return kDescent * scale;
    }

    bool covers(char32_t cp) const override { return cells_.count(cp) != 0; }

private:
    std::map<char32_t, Cell> cells_;
    Cell box_{};
};

} // namespace

const GlyphSource& builtin_font() {
    static const BitmapFont font;
    return font;
}

} // namespace ocrforge
