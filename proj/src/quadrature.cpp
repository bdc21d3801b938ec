#include "diamond/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace diamond {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (nodes at the even Kronrod positions).
const double kNodes[15] = {-0.991455371120813, -0.949107912342759, -0.864864423359769,
                           -0.741531185599394, -0.586087235467691, -0.405845151377397,
                           -0.207784955007898, 0.0,                0.207784955007898,
                           0.405845151377397,  0.586087235467691,  0.741531185599394,
                           0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kWeights[15] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                             0.140653259715525, 0.169004726639267, 0.190350578064785,
                             0.204432940075298, 0.209482141084728, 0.204432940075298,
                             0.190350578064785, 0.169004726639267, 0.140653259715525,
                             0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gWeights[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                            0.417959183673469, 0.381830050505119, 0.279705391489277,
                            0.129484966168870};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(mid + half * kNodes[i]);
        kronrod += kWeights[i] * fx;
        if (i % 2 == 1) gauss += gWeights[i / 2] * fx;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_panels) {
    if (!(b > a)) throw std::invalid_argument("integrate_adaptive: empty interval");
    std::priority_queue<Panel> panels;
    panels.push(evaluate(f, a, b));
    double total_err = panels.top().error;
    int n = 1;
    while (total_err > abs_tol && n < max_panels) {
        Panel worst = panels.top();
        panels.pop();
        Panel left = evaluate(f, worst.a, 0.5 * (worst.a + worst.b));
        Panel right = evaluate(f, 0.5 * (worst.a + worst.b), worst.b);
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++n;
    }
    double value = 0.0, error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    if (error > abs_tol)
        throw std::runtime_error("integrate_adaptive: failed to reach tolerance (error " +
                                 std::to_string(error) + ")");
    return {value, error};
}

}  // namespace diamond
