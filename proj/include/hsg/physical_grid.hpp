#pragma once

#include <vector>

namespace hsg {

// Tensor quadrature grid for physical-space (r, t) integrals against the
// cylindrical measure Omega_{2d-1} r^{2d-1} dr dt.
//
// Radial nodes are log-spaced on [r_min, r_max] (trapezoid in log r). The
// t-grid is a uniform midpoint core on [-T_box, T_box] plus, when built for
// singular weights, geometric panels grading |t| down to t_panel_min so that
// the 1/(r^4+t^2)-type cores of w4 integrands are resolved at every radius.
struct PhysicalGrid {
    std::vector<double> r_nodes;
    std::vector<double> r_weights;  // includes only the dr factor (log-spaced)
    std::vector<double> t_nodes;
    std::vector<double> t_weights;
    double t_box = 0.0;
    double r_max = 0.0;

    struct Options {
        double r_min = 1e-5;
        double r_max = 30.0;
        int r_per_decade = 96;
        double t_box = 20.0;
        int t_core = 1600;
        bool t_panels = true;        // graded panels near t = 0
        double t_panel_min = 1e-12;
        int t_panel_per_decade = 8;
    };

    static PhysicalGrid make(const Options& opt);

    // Accuracy presets. `t_box` should cover the field's decay; `lambda_max`
    // drives the core t-resolution (alias-safe sampling of e^{-i lambda t}).
    static PhysicalGrid fine(double t_box, double lambda_max);
    static PhysicalGrid fast(double t_box, double lambda_max);
};

}  // namespace hsg
