#pragma once

#include <array>
#include <string>
#include <vector>

#include "diamond/operators.hpp"
#include "diamond/params.hpp"

namespace diamond {

// Closed-form quantities of the adiabatically eliminated model. alpha's are
// the entries of the approximate resolvent of the excited-state Hamiltonian,
// delta's the effective mode frequencies/coupling, lambda's the dressed-state
// expansion parameters (signed; validity margins use magnitudes).
struct EffectiveCoefficients {
    double xi = 0.0;
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
    double alpha4 = 0.0, alpha5 = 0.0, alpha6 = 0.0;
    double delta0 = 0.0, delta1 = 0.0, delta2 = 0.0;
    double delta_r = 0.0;   // sqrt(4 delta2^2 + delta1^2)
    double epsilon = 0.0;   // mixing fraction of the superposition mode C
    double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0;
    double lambda4 = 0.0, lambda5 = 0.0, lambda6 = 0.0;
    double gamma_eff = 0.0;  // effective dissipation rate of the C mode
    double gamma_tot = 0.0;  // n gamma g^2 / Delta^2 (equals gamma_eff for g=g', gamma=gamma')
    int n_atoms = 1;
};

EffectiveCoefficients effective_coefficients(const PhysicalParams& p);

// Semiclassical dressed states of the driven atom, as amplitudes over
// {|1>,|2>,|3>}.
struct DressedBasis {
    double omega_r = 0.0;
    std::array<double, 3> energies{};  // {E_mu, E_phi, E_psi}
    double n_mu = 0.0, n_phi = 0.0, n_psi = 0.0;
    Eigen::Vector3cd mu, phi, psi;
};

DressedBasis dressed_basis(const PhysicalParams& p);

enum class Frame { Lab, RotatingAtDelta0, Generic };

struct FrameChoice {
    Frame variant = Frame::Lab;
    double delta_x = 0.0;  // only used by Generic

    static FrameChoice lab() { return {Frame::Lab, 0.0}; }
    static FrameChoice rotating_at_delta0() { return {Frame::RotatingAtDelta0, 0.0}; }
    static FrameChoice generic(double delta_x) { return {Frame::Generic, delta_x}; }
};

enum class LaserMode { Open, Closed };

// Full n-atom Hamiltonian on a diamond space (modes a,b + n four-level atoms).
Operator build_full_hamiltonian(const PhysicalParams& p, const HilbertSpace& space);

// The 4n spontaneous-emission jump operators, per atom:
// sqrt(gamma') s01, sqrt(gamma) s02, sqrt(gamma3) s23, sqrt(gamma3') s13.
std::vector<Operator> build_lindblads(const PhysicalParams& p, const HilbertSpace& space);

// H - (i/2) Sum L^dag L; level detunings acquire -i gamma/2 terms.
Operator build_nonhermitian(const PhysicalParams& p, const HilbertSpace& space);

// Effective two-mode Hamiltonian in the chosen rotating frame.
Operator build_effective_hamiltonian(const EffectiveCoefficients& c, const HilbertSpace& two_mode,
                                     const FrameChoice& frame);

// Effective jump operators; Open uses the alpha-weighted superpositions,
// Closed the lasers-off forms with complex detuning denominators.
std::array<Operator, 2> build_effective_lindblads(const PhysicalParams& p,
                                                  const EffectiveCoefficients& c,
                                                  const HilbertSpace& two_mode, LaserMode mode);

// Effective non-Hermitian generator (-2 delta2 - i gamma_eff / 2) C^dag C.
Operator build_effective_nonhermitian(const EffectiveCoefficients& c,
                                      const HilbertSpace& two_mode);

// Superposition mode C = sqrt(1-eps) a - sign(delta2) sqrt(eps) b.
Operator superposition_mode(const EffectiveCoefficients& c, const HilbertSpace& two_mode);

// Value of Omega' that makes delta1 vanish exactly.
double omega_prime_for_zero_delta1(double omega, double delta, double g, double g_prime);

enum class MarginStatus { Pass, Warn, Fail };

struct ValidityMargin {
    std::string name;
    double value = 0.0;
    double pass_at = 0.0;
    double warn_at = 0.0;
    MarginStatus status = MarginStatus::Pass;
};

struct ValidityReport {
    std::vector<ValidityMargin> margins;
    bool all_pass() const;
    bool any_fail() const;
};

// Margins for the adiabatic-elimination conditions given the expected photon
// numbers in each mode. Detuning margins pass at >= 10 and warn at >= 3; the
// dressed-parameter ratio passes at >= 3 (the working regimes of record sit
// between 4 and 8).
ValidityReport validity_report(const PhysicalParams& p, double nbar_a, double nbar_b);

}  // namespace diamond
