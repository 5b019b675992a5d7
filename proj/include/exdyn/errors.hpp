#pragma once

#include <stdexcept>
#include <string>

namespace exdyn {

// Input that could not be understood (bad JSON, bad map string, bad flags).
// The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A brute-force enumeration was requested on a space larger than the cap.
struct size_cap_error : std::runtime_error {
    explicit size_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// deg(h^n) would exceed the configured cap for cycle finding.
struct degree_cap_error : std::runtime_error {
    explicit degree_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// The simultaneous root solve did not reach the requested residual.
struct root_convergence_error : std::runtime_error {
    explicit root_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Two grids that must share dimensions and window do not.
struct grid_mismatch_error : std::runtime_error {
    explicit grid_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

// immediate_basin was asked for an end whose cycle meets the basin nowhere.
struct cycle_not_in_basin_error : std::runtime_error {
    explicit cycle_not_in_basin_error(const std::string& what) : std::runtime_error(what) {}
};

// immediate_basin_grid was asked for an end with a cycle point outside the window.
struct cycle_pixel_outside_window_error : std::runtime_error {
    explicit cycle_pixel_outside_window_error(const std::string& what) : std::runtime_error(what) {}
};

// A grid label has no palette entry.
struct unknown_label_error : std::runtime_error {
    explicit unknown_label_error(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read or written.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace exdyn
