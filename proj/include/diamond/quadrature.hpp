#pragma once

#include <functional>

namespace diamond {

struct QuadResult {
    double value;
    double error;  // estimated absolute error
};

// Adaptive Gauss-Kronrod (G7/K15) panel integration of f over [a, b] down to
// the requested absolute tolerance. Panels are bisected worst-first.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_panels = 4000);

}  // namespace diamond
