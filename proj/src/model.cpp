#include "diamond/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace diamond {

namespace {

constexpr Complex kI{0.0, 1.0};

Operator embed_product(const HilbertSpace& space,
                       const std::vector<std::pair<int, Matrix>>& pieces, double scale) {
    Operator op = diamond::embed_product(space, pieces);
    op.mat *= scale;
    return op;
}

void require_diamond_space(const HilbertSpace& space, const PhysicalParams& p, const char* what) {
    if (space.num_factors() != 2 + p.n_atoms)
        throw std::invalid_argument(std::string(what) + ": space has " +
                                    std::to_string(space.num_factors()) + " factors, expected " +
                                    std::to_string(2 + p.n_atoms));
    for (int k = 0; k < p.n_atoms; ++k)
        if (space.factors()[2 + k].dim != 4)
            throw std::invalid_argument(std::string(what) + ": factor " + std::to_string(2 + k) +
                                        " is not a four-level atom");
}

void require_two_mode(const HilbertSpace& space, const char* what) {
    if (space.num_factors() != 2)
        throw std::invalid_argument(std::string(what) + ": expected a two-mode space");
}

// Shared assembly for the Hermitian and non-Hermitian Hamiltonians; the only
// difference is the complex level shifts on the diagonal.
Operator assemble_hamiltonian(const PhysicalParams& p, const HilbertSpace& space,
                              const std::array<Complex, 3>& level_shift) {
    p.validate();
    require_diamond_space(space, p, "build_full_hamiltonian");
    const int dim_a = space.factors()[0].dim;
    const int dim_b = space.factors()[1].dim;
    const Matrix a = fock_lowering(dim_a);
    const Matrix b = fock_lowering(dim_b);

    Operator h = zero_operator(space);
    for (int k = 0; k < p.n_atoms; ++k) {
        const int atom = 2 + k;
        Matrix diag = Matrix::Zero(4, 4);
        diag(1, 1) = level_shift[0];
        diag(2, 2) = level_shift[1];
        diag(3, 3) = level_shift[2];
        h += embed(space, atom, diag);

        Matrix drive = Matrix::Zero(4, 4);
        drive(2, 3) = p.omega;
        drive(3, 2) = p.omega;
        drive(1, 3) = p.omega_prime;
        drive(3, 1) = p.omega_prime;
        h += embed(space, atom, drive);

        if (p.g != 0.0) {
            h += embed_product(space, {{0, Matrix(a.adjoint())}, {atom, atom_flip(0, 2)}},
                               p.g);
            h += embed_product(space, {{0, a}, {atom, atom_flip(2, 0)}}, p.g);
        }
        if (p.g_prime != 0.0) {
            h += embed_product(space, {{1, Matrix(b.adjoint())}, {atom, atom_flip(0, 1)}},
                               p.g_prime);
            h += embed_product(space, {{1, b}, {atom, atom_flip(1, 0)}}, p.g_prime);
        }
    }
    return h;
}

}  // namespace

Operator build_full_hamiltonian(const PhysicalParams& p, const HilbertSpace& space) {
    return assemble_hamiltonian(p, space, {p.delta, p.delta, 2.0 * p.delta});
}

Operator build_nonhermitian(const PhysicalParams& p, const HilbertSpace& space) {
    return assemble_hamiltonian(
        p, space,
        {p.delta - 0.5 * kI * p.gamma_prime, p.delta - 0.5 * kI * p.gamma,
         2.0 * p.delta - 0.5 * kI * p.gamma_dprime()});
}

std::vector<Operator> build_lindblads(const PhysicalParams& p, const HilbertSpace& space) {
    p.validate();
    require_diamond_space(space, p, "build_lindblads");
    std::vector<Operator> ls;
    ls.reserve(4 * p.n_atoms);
    for (int k = 0; k < p.n_atoms; ++k) {
        const int atom = 2 + k;
        ls.push_back({space, SpMat(std::sqrt(p.gamma_prime) *
                                   embed(space, atom, atom_flip(0, 1)).mat)});
        ls.push_back({space, SpMat(std::sqrt(p.gamma) * embed(space, atom, atom_flip(0, 2)).mat)});
        ls.push_back({space, SpMat(std::sqrt(p.gamma3) * embed(space, atom, atom_flip(2, 3)).mat)});
        ls.push_back(
            {space, SpMat(std::sqrt(p.gamma3_prime) * embed(space, atom, atom_flip(1, 3)).mat)});
    }
    return ls;
}

EffectiveCoefficients effective_coefficients(const PhysicalParams& p) {
    p.validate();
    if (p.delta == 0.0)
        throw std::invalid_argument("effective_coefficients: Delta must be nonzero");
    const double o2 = p.omega * p.omega, op2 = p.omega_prime * p.omega_prime;
    const double d2 = p.delta * p.delta;
    const double pole = o2 + op2 - 2.0 * d2;
    if (pole == 0.0)
        throw std::invalid_argument(
            "effective_coefficients: Omega^2 + Omega'^2 = 2 Delta^2 puts the resolvent on its "
            "pole");

    EffectiveCoefficients c;
    c.n_atoms = p.n_atoms;
    c.xi = 1.0 / (p.delta * pole);
    c.alpha1 = c.xi * (o2 - 2.0 * d2);
    c.alpha2 = c.xi * (op2 - 2.0 * d2);
    c.alpha3 = -c.xi * p.omega * p.omega_prime;
    c.alpha4 = -c.xi * d2;
    c.alpha5 = c.xi * p.delta * p.omega_prime;
    c.alpha6 = c.xi * p.delta * p.omega;

    const double n = p.n_atoms;
    c.delta0 = -n * p.g * p.g * c.alpha2;
    c.delta1 = n * (p.g * p.g * c.alpha2 - p.g_prime * p.g_prime * c.alpha1);
    c.delta2 = -n * p.g * p.g_prime * c.alpha3;
    c.delta_r = std::sqrt(4.0 * c.delta2 * c.delta2 + c.delta1 * c.delta1);
    c.epsilon = c.delta_r > 0.0 ? 0.5 * (1.0 - c.delta1 / c.delta_r) : 0.5;

    if (p.omega != 0.0 || p.omega_prime != 0.0) {
        const DressedBasis d = dressed_basis(p);
        const double den_minus = 3.0 * p.delta - d.omega_r;
        const double den_plus = 3.0 * p.delta + d.omega_r;
        if (den_minus == 0.0 || den_plus == 0.0)
            throw std::invalid_argument(
                "effective_coefficients: dressed-state denominator 3 Delta -/+ Omega_R vanishes");
        c.lambda1 = d.n_mu * p.g * p.omega_prime / p.delta;
        c.lambda2 = 4.0 * d.n_phi * p.g * p.omega / den_minus;
        c.lambda3 = 4.0 * d.n_psi * p.g * p.omega / den_plus;
        c.lambda4 = d.n_mu * p.g_prime * p.omega / p.delta;
        c.lambda5 = 4.0 * d.n_phi * p.g_prime * p.omega_prime / den_minus;
        c.lambda6 = 4.0 * d.n_psi * p.g_prime * p.omega_prime / den_plus;
    }

    const double g2 = p.g * p.g, gp2 = p.g_prime * p.g_prime;
    const double csum = g2 + gp2;
    c.gamma_eff = csum > 0.0 ? 2.0 * n * g2 * gp2 * (g2 * p.gamma_prime + gp2 * p.gamma) /
                                   (d2 * csum * csum)
                             : 0.0;
    c.gamma_tot = n * p.gamma * g2 / d2;
    return c;
}

DressedBasis dressed_basis(const PhysicalParams& p) {
    if (p.omega == 0.0 && p.omega_prime == 0.0)
        throw std::invalid_argument("dressed_basis: |mu> is undefined for Omega = Omega' = 0");
    DressedBasis d;
    d.omega_r = std::sqrt(p.delta * p.delta + 4.0 * p.omega * p.omega +
                          4.0 * p.omega_prime * p.omega_prime);
    d.energies = {p.delta, (3.0 * p.delta - d.omega_r) / 2.0, (3.0 * p.delta + d.omega_r) / 2.0};
    d.n_mu = 1.0 / std::sqrt(p.omega * p.omega + p.omega_prime * p.omega_prime);
    d.n_phi = 1.0 / std::sqrt(2.0 * d.omega_r * (d.omega_r - p.delta));
    d.n_psi = 1.0 / std::sqrt(2.0 * d.omega_r * (d.omega_r + p.delta));
    d.mu << -d.n_mu * p.omega, d.n_mu * p.omega_prime, 0.0;
    d.phi << 2.0 * d.n_phi * p.omega_prime, 2.0 * d.n_phi * p.omega,
        d.n_phi * (p.delta - d.omega_r);
    d.psi << 2.0 * d.n_psi * p.omega_prime, 2.0 * d.n_psi * p.omega,
        d.n_psi * (p.delta + d.omega_r);
    return d;
}

Operator build_effective_hamiltonian(const EffectiveCoefficients& c, const HilbertSpace& two_mode,
                                     const FrameChoice& frame) {
    require_two_mode(two_mode, "build_effective_hamiltonian");
    if (!std::isfinite(frame.delta_x))
        throw std::invalid_argument("build_effective_hamiltonian: delta_x must be finite");
    const int da = two_mode.factors()[0].dim, db = two_mode.factors()[1].dim;
    const Matrix na = fock_number(da), nb = fock_number(db);
    const Matrix a = fock_lowering(da), b = fock_lowering(db);

    double diag_both = 0.0;
    switch (frame.variant) {
        case Frame::Lab: diag_both = c.delta0; break;
        case Frame::RotatingAtDelta0: diag_both = 0.0; break;
        case Frame::Generic: diag_both = frame.delta_x; break;
    }
    Operator h = zero_operator(two_mode);
    if (diag_both != 0.0) {
        h += embed(two_mode, 0, diag_both * na);
        h += embed(two_mode, 1, diag_both * nb);
    }
    h += embed(two_mode, 1, c.delta1 * nb);
    if (c.delta2 != 0.0) {
        Operator hop = embed_product(two_mode, {{0, Matrix(a.adjoint())}, {1, b}});
        h += Complex(c.delta2, 0) * (hop + hop.adjoint());
    }
    return h;
}

std::array<Operator, 2> build_effective_lindblads(const PhysicalParams& p,
                                                  const EffectiveCoefficients& c,
                                                  const HilbertSpace& two_mode, LaserMode mode) {
    require_two_mode(two_mode, "build_effective_lindblads");
    if (two_mode.excitation_sector())
        throw std::invalid_argument(
            "build_effective_lindblads: jump operators do not conserve the sector");
    const Operator a = mode_a(two_mode), b = mode_b(two_mode);
    const double n = p.n_atoms;
    if (mode == LaserMode::Open) {
        Operator l1 = Complex(std::sqrt(n * p.gamma_prime), 0) *
                      (Complex(c.alpha3 * p.g, 0) * a + Complex(c.alpha1 * p.g_prime, 0) * b);
        Operator l2 = Complex(std::sqrt(n * p.gamma), 0) *
                      (Complex(c.alpha2 * p.g, 0) * a + Complex(c.alpha3 * p.g_prime, 0) * b);
        return {l1, l2};
    }
    if (p.delta == 0.0)
        throw std::invalid_argument("build_effective_lindblads: Delta = 0 in closed mode");
    Complex w1 = std::sqrt(n * p.gamma_prime) * p.g_prime /
                 Complex(p.delta, -0.5 * p.gamma_prime);
    Complex w2 = std::sqrt(n * p.gamma) * p.g / Complex(p.delta, -0.5 * p.gamma);
    return {w1 * b, w2 * a};
}

Operator superposition_mode(const EffectiveCoefficients& c, const HilbertSpace& two_mode) {
    require_two_mode(two_mode, "superposition_mode");
    const double sign = c.delta2 >= 0.0 ? 1.0 : -1.0;
    return Complex(std::sqrt(1.0 - c.epsilon), 0) * mode_a(two_mode) -
           Complex(sign * std::sqrt(c.epsilon), 0) * mode_b(two_mode);
}

Operator build_effective_nonhermitian(const EffectiveCoefficients& c,
                                      const HilbertSpace& two_mode) {
    const Operator cmode = superposition_mode(c, two_mode);
    const Operator number = cmode.adjoint() * cmode;
    return Complex(-2.0 * c.delta2, -0.5 * c.gamma_eff) * number;
}

double omega_prime_for_zero_delta1(double omega, double delta, double g, double g_prime) {
    if (g == 0.0) throw std::invalid_argument("omega_prime_for_zero_delta1: g must be nonzero");
    const double radicand =
        (omega * omega - 2.0 * delta * delta) * g_prime * g_prime / (g * g) + 2.0 * delta * delta;
    if (radicand < 0.0)
        throw std::invalid_argument(
            "omega_prime_for_zero_delta1: no real solution (negative radicand)");
    return std::sqrt(radicand);
}

bool ValidityReport::all_pass() const {
    for (const auto& m : margins)
        if (m.status != MarginStatus::Pass) return false;
    return true;
}

bool ValidityReport::any_fail() const {
    for (const auto& m : margins)
        if (m.status == MarginStatus::Fail) return true;
    return false;
}

ValidityReport validity_report(const PhysicalParams& p, double nbar_a, double nbar_b) {
    const double g_min = std::min(p.g, p.g_prime);
    const double n = p.n_atoms;
    auto classify = [](double value, double pass_at, double warn_at) {
        return value >= pass_at ? MarginStatus::Pass
                                : (value >= warn_at ? MarginStatus::Warn : MarginStatus::Fail);
    };
    auto detuning_margin = [&](double nbar) {
        const double den = g_min * std::sqrt(n * nbar);
        return den > 0.0 ? std::abs(p.delta) / den : std::numeric_limits<double>::infinity();
    };

    ValidityReport rep;
    const double m1 = detuning_margin(nbar_a);
    const double m2 = detuning_margin(nbar_b);
    rep.margins.push_back({"detuning_vs_mode_a", m1, 10.0, 3.0, classify(m1, 10.0, 3.0)});
    rep.margins.push_back({"detuning_vs_mode_b", m2, 10.0, 3.0, classify(m2, 10.0, 3.0)});

    double ratio = std::numeric_limits<double>::infinity();
    if (p.omega != 0.0 || p.omega_prime != 0.0) {
        const EffectiveCoefficients c = effective_coefficients(p);
        const double lo = std::min(std::abs(c.lambda1), std::abs(c.lambda4));
        const double hi = std::max(std::max(std::abs(c.lambda2), std::abs(c.lambda3)),
                                   std::max(std::abs(c.lambda5), std::abs(c.lambda6)));
        ratio = hi > 0.0 ? lo / hi : std::numeric_limits<double>::infinity();
    }
    rep.margins.push_back(
        {"dressed_parameter_ratio", ratio, 3.0, 1.5, classify(ratio, 3.0, 1.5)});
    return rep;
}

}  // namespace diamond
