#pragma once

#include <stdexcept>

namespace diamond {

// All model rates are angular frequencies. The library is scale-invariant, so
// callers may work in any consistent unit (tests mostly use units of g);
// absolute calculations use rad/s throughout.
struct PhysicalParams {
    double g = 0.0;            // |0>-|2> coupling to mode a
    double g_prime = 0.0;      // |0>-|1> coupling to mode b
    double delta = 0.0;        // common detuning
    double omega = 0.0;        // classical Rabi frequency on |2>-|3>
    double omega_prime = 0.0;  // classical Rabi frequency on |1>-|3>
    double gamma = 0.0;        // spontaneous rate |2> -> |0>
    double gamma_prime = 0.0;  // spontaneous rate |1> -> |0>
    double gamma3 = 0.0;       // spontaneous rate |3> -> |2>
    double gamma3_prime = 0.0; // spontaneous rate |3> -> |1>
    int n_atoms = 1;
    int fock_cutoff = 1;       // per-mode Fock cutoff (levels 0..fock_cutoff)

    double gamma_dprime() const { return gamma3 + gamma3_prime; }

    void validate() const {
        if (g < 0 || g_prime < 0 || omega < 0 || omega_prime < 0)
            throw std::invalid_argument("PhysicalParams: couplings must be real non-negative");
        if (gamma < 0 || gamma_prime < 0 || gamma3 < 0 || gamma3_prime < 0)
            throw std::invalid_argument("PhysicalParams: rates must be non-negative");
        if (n_atoms < 1) throw std::invalid_argument("PhysicalParams: n_atoms must be >= 1");
        if (fock_cutoff < 0) throw std::invalid_argument("PhysicalParams: negative Fock cutoff");
    }
};

}  // namespace diamond
