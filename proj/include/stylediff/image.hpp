#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stylediff/errors.hpp"

namespace stylediff {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

// 8-bit RGB raster, row-major. pixel count = width * height.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    static Image blank(int w, int h, Rgb fill = {}) {
        Image img;
        img.width = w;
        img.height = h;
        img.pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
        return img;
    }

    bool empty() const { return width <= 0 || height <= 0 || pixels.empty(); }

    Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Rgb& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const Image&) const = default;
};

inline Rgb hsv_to_rgb(double hue_deg, double s, double v) {
    double h = std::fmod(hue_deg, 360.0);
    if (h < 0) h += 360.0;
    double c = v * s;
    double hp = h / 60.0;
    double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1)      { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else             { r = c; b = x; }
    double m = v - c;
    auto q = [](double t) { return static_cast<std::uint8_t>(std::lround(255.0 * t)); };
    return {q(r + m), q(g + m), q(b + m)};
}

inline Image solid_image(int w, int h, Rgb color) { return Image::blank(w, h, color); }

// Vertical stripes, two columns on / two columns off. Width-2 bands keep
// central-difference gradients nonzero.
inline Image vstripes_image(int w, int h, Rgb on, Rgb off = {}) {
    Image img = Image::blank(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = ((x / 2) % 2 == 0) ? on : off;
    return img;
}

inline Image hstripes_image(int w, int h, Rgb on, Rgb off = {}) {
    Image img = Image::blank(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = ((y / 2) % 2 == 0) ? on : off;
    return img;
}

inline Image checker_image(int w, int h, Rgb on, Rgb off = {}) {
    Image img = Image::blank(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = (((x / 2) + (y / 2)) % 2 == 0) ? on : off;
    return img;
}

// ---- binary PPM (P6, maxval 255), bit-exact round trips ----

inline void write_ppm(const Image& img, std::ostream& out) {
    if (img.empty()) throw IoError("refusing to write empty image");
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    for (const Rgb& p : img.pixels) {
        char buf[3] = {static_cast<char>(p.r), static_cast<char>(p.g), static_cast<char>(p.b)};
        out.write(buf, 3);
    }
}

inline void write_ppm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_ppm(img, out);
    if (!out) throw IoError("write failed: " + path);
}

namespace detail {
// PPM header token reader: skips whitespace and '#' comments.
inline std::string ppm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            break;
        }
    }
    while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
    return tok;
}
}  // namespace detail

inline Image read_ppm(std::istream& in) {
    if (detail::ppm_token(in) != "P6") throw IoError("not a binary PPM (P6) stream");
    auto parse_int = [&](const char* what) {
        std::string tok = detail::ppm_token(in);
        try {
            std::size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw IoError(std::string("bad PPM ") + what + ": '" + tok + "'");
        }
    };
    long w = parse_int("width");
    long ht = parse_int("height");
    long maxval = parse_int("maxval");
    if (w <= 0 || ht <= 0) throw IoError("PPM dimensions must be positive");
    if (maxval != 255) throw IoError("only maxval 255 PPMs are supported");
    Image img = Image::blank(static_cast<int>(w), static_cast<int>(ht));
    std::vector<char> raw(img.pixels.size() * 3);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw IoError("truncated PPM pixel data");
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        img.pixels[i] = {static_cast<std::uint8_t>(raw[3 * i]),
                         static_cast<std::uint8_t>(raw[3 * i + 1]),
                         static_cast<std::uint8_t>(raw[3 * i + 2])};
    }
    return img;
}

inline Image read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image: " + path);
    return read_ppm(in);
}

}  // namespace stylediff
