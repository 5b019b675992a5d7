#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <exdyn/errors.hpp>
#include <exdyn/render/palette.hpp>
#include <exdyn/sphere/grid.hpp>

namespace exdyn::render {

// Raw RGB image, row-major, top row first (the grid's row 0 is already the
// top, i.e. maximal imaginary part).
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // 3 bytes per pixel

    friend bool operator==(const Image& a, const Image& b) {
        return a.width == b.width && a.height == b.height && a.rgb == b.rgb;
    }
};

inline Image render(const sphere::BasinGrid& grid, const Palette& palette) {
    Image img;
    img.width = grid.spec.width;
    img.height = grid.spec.height;
    img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);
    for (std::size_t ix = 0; ix < grid.labels.size(); ++ix) {
        Rgb c = palette.color_of(grid.labels[ix]);
        img.rgb[ix * 3 + 0] = c.r;
        img.rgb[ix * 3 + 1] = c.g;
        img.rgb[ix * 3 + 2] = c.b;
    }
    return img;
}

// Binary PPM: "P6\n<width> <height>\n255\n" followed by raw RGB bytes.
inline std::vector<std::uint8_t> ppm_bytes(const Image& img) {
    std::string header =
        "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.rgb.begin(), img.rgb.end());
    return out;
}

inline void write_ppm(const Image& img, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path.string() + " for writing");
    auto bytes = ppm_bytes(img);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw io_error("failed writing " + path.string());
}

inline Image read_ppm(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path.string());
    std::string magic;
    f >> magic;
    if (magic != "P6") throw io_error(path.string() + " is not a binary PPM");
    int width = 0, height = 0, maxval = 0;
    f >> width >> height >> maxval;
    if (!f || width <= 0 || height <= 0 || maxval != 255)
        throw io_error(path.string() + " has an unsupported PPM header");
    f.get(); // the single whitespace byte after the header
    Image img;
    img.width = width;
    img.height = height;
    img.rgb.resize(static_cast<std::size_t>(width) * height * 3);
    f.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
    if (f.gcount() != static_cast<std::streamsize>(img.rgb.size()))
        throw io_error(path.string() + " is truncated");
    return img;
}

} // namespace exdyn::render
