#pragma once

#include <functional>
#include <limits>

#include "diamond/linalg.hpp"

namespace diamond {

struct IntegratorOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    long max_steps = 200000000L;
};

// Right-hand side dy/dt = f(t, y) on complex state vectors.
using OdeRhs = std::function<void(double t, const Vector& y, Vector& dydt)>;

// Called after each accepted step with the bracketing states and derivatives;
// samplers interpolate observables inside [t0, t1] with the cubic Hermite
// rule (see hermite_eval).
using StepCallback = std::function<void(double t0, const Vector& y0, const Vector& f0, double t1,
                                        const Vector& y1, const Vector& f1)>;

// Cubic Hermite interpolation on one accepted step.
Vector hermite_eval(double t, double t0, const Vector& y0, const Vector& f0, double t1,
                    const Vector& y1, const Vector& f1);

// Adaptive embedded Dormand-Prince 5(4) integration from t0 to t1.
// Throws on step-size underflow or non-finite states, naming the time.
Vector integrate_ode(const OdeRhs& rhs, double t0, double t1, Vector y0,
                     const IntegratorOptions& opts, const StepCallback& on_step = nullptr);

}  // namespace diamond
