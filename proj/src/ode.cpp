#include "diamond/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diamond {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between 5th- and 4th-order weights, for the error estimate.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

double error_norm(const Vector& err, const Vector& y0, const Vector& y1, double atol,
                  double rtol) {
    double sum = 0.0;
    for (long i = 0; i < err.size(); ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double r = std::abs(err(i)) / scale;
        sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(err.size()));
}

}  // namespace

Vector hermite_eval(double t, double t0, const Vector& y0, const Vector& f0, double t1,
                    const Vector& y1, const Vector& f1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y0 + (h10 * h) * f0 + h01 * y1 + (h11 * h) * f1;
}

Vector integrate_ode(const OdeRhs& rhs, double t0, double t1, Vector y,
                     const IntegratorOptions& opts, const StepCallback& on_step) {
    if (t1 < t0) throw std::invalid_argument("integrate_ode: backwards integration not supported");
    if (t1 == t0) return y;

    const long n = y.size();
    Vector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);
    rhs(t0, y, k1);

    // Initial step from the derivative scale.
    double scale_y = y.norm() + opts.abs_tol;
    double scale_f = k1.norm() + opts.abs_tol;
    double h = std::min({0.01 * scale_y / scale_f, t1 - t0, opts.max_step});
    if (!(h > 0) || !std::isfinite(h)) h = (t1 - t0) * 1e-6;

    double t = t0;
    long steps = 0;
    while (t < t1) {
        if (++steps > opts.max_steps)
            throw std::runtime_error("integrate_ode: exceeded max step count at t = " +
                                     std::to_string(t));
        h = std::min({h, t1 - t, opts.max_step});
        const double underflow = 1e-14 * std::max(std::abs(t), 1.0);
        if (h < underflow)
            throw std::runtime_error("integrate_ode: step size underflow at t = " +
                                     std::to_string(t));

        ytmp = y + h * (a21 * k1);
        rhs(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        rhs(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + h, ynew, k7);  // FSAL
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double enorm = error_norm(err, y, ynew, opts.abs_tol, opts.rel_tol);
        if (!std::isfinite(enorm) || !ynew.allFinite())
            throw std::runtime_error("integrate_ode: non-finite state at t = " +
                                     std::to_string(t));

        if (enorm <= 1.0) {
            if (on_step) on_step(t, y, k1, t + h, ynew, k7);
            t += h;
            y.swap(ynew);
            k1.swap(k7);
        }
        const double factor =
            enorm > 0 ? 0.9 * std::pow(enorm, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return y;
}

}  // namespace diamond
