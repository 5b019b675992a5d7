#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include <exdyn/errors.hpp>
#include <exdyn/sphere/grid.hpp>

namespace exdyn::render {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb& a, const Rgb& c) {
        return a.r == c.r && a.g == c.g && a.b == c.b;
    }
};

inline constexpr Rgb black{0, 0, 0};        // unclassified pixels
inline constexpr Rgb brown{139, 69, 19};    // the end at infinity

namespace detail {

inline Rgb hsv_to_rgb(double h, double s, double v) {
    h = std::fmod(h, 360.0);
    double c = v * s;
    double x = c * (1.0 - std::fabs(std::fmod(h / 60.0, 2.0) - 1.0));
    double m = v - c;
    double r = 0, g = 0, b = 0;
    if (h < 60) { r = c; g = x; }
    else if (h < 120) { r = x; g = c; }
    else if (h < 180) { g = c; b = x; }
    else if (h < 240) { g = x; b = c; }
    else if (h < 300) { r = x; b = c; }
    else { r = c; b = x; }
    auto to8 = [&](double u) { return static_cast<std::uint8_t>(std::lround((u + m) * 255.0)); };
    return {to8(r), to8(g), to8(b)};
}

} // namespace detail

// Colors for the legend entries of a grid.  A pure function of the legend:
// black is reserved for unclassified pixels, brown for the end at infinity,
// and the remaining ends walk a golden-angle hue sequence (skipping any
// collision with a reserved or already assigned color).
class Palette {
public:
    static Palette for_grid(const sphere::BasinGrid& grid) {
        Palette p;
        int hue_step = 0;
        for (const auto& label : grid.legend) {
            bool is_infinity =
                grid.cycles.cycles[static_cast<std::size_t>(label.cycle_id)].contains_infinity();
            if (is_infinity) {
                p.colors_.push_back(brown);
                continue;
            }
            Rgb c;
            do {
                c = detail::hsv_to_rgb(hue_step * 137.508, 0.78, 0.92);
                ++hue_step;
            } while (c == black || c == brown || p.has(c));
            p.colors_.push_back(c);
        }
        return p;
    }

    // Override document: { "<cycle>:<phase>": [r, g, b], ... }.  Entries not
    // mentioned keep their default color.
    static Palette from_json(const nlohmann::json& j, const sphere::BasinGrid& grid) {
        Palette p = for_grid(grid);
        if (!j.is_object()) throw parse_error("palette override must be a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::size_t colon = it.key().find(':');
            if (colon == std::string::npos)
                throw parse_error("palette key \"" + it.key() + "\" is not \"cycle:phase\"");
            sphere::Label l;
            try {
                l.cycle_id = std::stoi(it.key().substr(0, colon));
                l.phase = std::stoi(it.key().substr(colon + 1));
            } catch (...) {
                throw parse_error("palette key \"" + it.key() + "\" is not \"cycle:phase\"");
            }
            int ix = grid.legend_index(l);
            if (ix < 0) throw unknown_label_error("palette key \"" + it.key() +
                                                  "\" matches no label of this grid");
            const auto& v = *it;
            if (!v.is_array() || v.size() != 3)
                throw parse_error("palette value for \"" + it.key() + "\" must be [r,g,b]");
            p.colors_[static_cast<std::size_t>(ix)] = {v[0].get<std::uint8_t>(),
                                                       v[1].get<std::uint8_t>(),
                                                       v[2].get<std::uint8_t>()};
        }
        return p;
    }

    // label_index -1 means unclassified.
    Rgb color_of(std::int32_t label_index) const {
        if (label_index < 0) return black;
        if (label_index >= static_cast<std::int32_t>(colors_.size()))
            throw unknown_label_error("label index " + std::to_string(label_index) +
                                      " has no palette entry");
        return colors_[static_cast<std::size_t>(label_index)];
    }

    const std::vector<Rgb>& colors() const { return colors_; }

private:
    bool has(const Rgb& c) const {
        for (const auto& x : colors_)
            if (x == c) return true;
        return false;
    }

    std::vector<Rgb> colors_;
};

} // namespace exdyn::render
