#include "hsg/physical_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsg {

PhysicalGrid PhysicalGrid::make(const Options& opt) {
    if (!(opt.r_min > 0.0) || !(opt.r_max > opt.r_min) || opt.r_per_decade < 4 ||
        !(opt.t_box > 0.0) || opt.t_core < 8)
        throw std::invalid_argument("PhysicalGrid: bad options");

    PhysicalGrid g;
    g.t_box = opt.t_box;
    g.r_max = opt.r_max;

    // radial: trapezoid in log r (endpoint values of the integrands vanish)
    double decades = std::log10(opt.r_max / opt.r_min);
    int nr = std::max(8, static_cast<int>(std::lround(decades * opt.r_per_decade)));
    double llo = std::log(opt.r_min), lhi = std::log(opt.r_max);
    double hl = (lhi - llo) / (nr - 1);
    g.r_nodes.resize(nr);
    g.r_weights.resize(nr);
    for (int i = 0; i < nr; ++i) {
        double r = std::exp(llo + i * hl);
        g.r_nodes[i] = r;
        g.r_weights[i] = r * hl;
    }
    g.r_weights.front() *= 0.5;
    g.r_weights.back() *= 0.5;

    // t: uniform midpoint core on [a_core, T] mirrored, panels fill (0, a_core]
    double dt = 2.0 * opt.t_box / opt.t_core;
    double a_core = opt.t_panels ? dt : 0.0;
    int ncell = std::max(4, static_cast<int>(std::lround((opt.t_box - a_core) / dt)));
    double dc = (opt.t_box - a_core) / ncell;
    std::vector<double> tp, wp;
    for (int m = 0; m < ncell; ++m) {
        tp.push_back(a_core + (m + 0.5) * dc);
        wp.push_back(dc);
    }
    if (opt.t_panels) {
        double lo = opt.t_panel_min;
        while (lo < a_core) {
            double hi = std::min(lo * 10.0, a_core);
            int nn = opt.t_panel_per_decade;
            for (int m = 0; m < nn; ++m) {
                tp.push_back(lo + (m + 0.5) * (hi - lo) / nn);
                wp.push_back((hi - lo) / nn);
            }
            lo = hi;
        }
    }
    int nt = static_cast<int>(tp.size());
    g.t_nodes.resize(2 * nt);
    g.t_weights.resize(2 * nt);
    for (int m = 0; m < nt; ++m) {
        g.t_nodes[m] = -tp[nt - 1 - m];
        g.t_weights[m] = wp[nt - 1 - m];
        g.t_nodes[nt + m] = tp[m];
        g.t_weights[nt + m] = wp[m];
    }
    return g;
}

PhysicalGrid PhysicalGrid::fine(double t_box, double lambda_max) {
    Options o;
    o.t_box = t_box;
    // alias-safe core sampling for products of tones up to lambda_max
    double sampling = 2.2 * lambda_max + 24.0;
    o.t_core = std::max(800, static_cast<int>(std::lround(2.0 * t_box * sampling / (2.0 * M_PI))));
    o.r_per_decade = 96;
    o.r_min = 1e-5;
    o.r_max = 30.0;
    return make(o);
}

PhysicalGrid PhysicalGrid::fast(double t_box, double lambda_max) {
    Options o;
    o.t_box = t_box;
    double sampling = 2.1 * lambda_max + 10.0;
    o.t_core = std::max(96, static_cast<int>(std::lround(2.0 * t_box * sampling / (2.0 * M_PI))));
    o.r_per_decade = 20;
    o.r_min = 1e-4;
    o.r_max = 25.0;
    o.t_panel_per_decade = 4;
    o.t_panel_min = 1e-10;
    return make(o);
}

}  // namespace hsg
