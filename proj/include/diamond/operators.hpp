#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <utility>
#include <vector>

#include "diamond/hilbert.hpp"
#include "diamond/linalg.hpp"

namespace diamond {

using SpMat = Eigen::SparseMatrix<Complex>;

// An operator on a HilbertSpace. Stored sparse; all builders in this library
// produce sparse data, dense views are for small-system tests and matrix
// functions.
struct Operator {
    HilbertSpace space;
    SpMat mat;

    Matrix dense() const { return Matrix(mat); }
    Operator adjoint() const { return {space, SpMat(mat.adjoint())}; }
    Vector apply(const Vector& v) const { return mat * v; }

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(Complex s, Operator a) {
        a.mat *= s;
        return a;
    }
    friend Operator operator*(const Operator& a, const Operator& b);

    double hermiticity_defect() const { return (Matrix(mat) - Matrix(mat).adjoint()).norm(); }
};

struct KetState {
    HilbertSpace space;
    Vector amps;
    bool normalized = true;

    double norm() const { return amps.norm(); }
};

struct DensityOperator {
    HilbertSpace space;
    Matrix rho;

    double trace() const { return rho.trace().real(); }
    // Largest violations, for validity checks: Hermiticity defect and the most
    // negative eigenvalue (0 when positive semidefinite).
    double hermiticity_defect() const { return (rho - rho.adjoint()).norm(); }
    double min_eigenvalue() const;
};

Operator zero_operator(const HilbertSpace& space);
Operator identity_operator(const HilbertSpace& space);

// Lifts `small` acting on one factor into the composite space (identity on all
// other factors). In a sector-restricted space the operator must conserve the
// factor's excitation weight; otherwise its image leaves the sector and the
// call throws.
Operator embed(const HilbertSpace& space, int factor, const Matrix& small);

// Product of single-factor operators on distinct factors, embedded jointly.
// Each piece must change its factor's weight uniformly and the total change
// must vanish, so the monomial conserves the excitation sector.
Operator embed_product(const HilbertSpace& space,
                       const std::vector<std::pair<int, Matrix>>& pieces);

// Small-matrix builders.
Matrix fock_lowering(int dim);           // a with <k-1|a|k> = sqrt(k)
Matrix fock_number(int dim);             // diag(0..dim-1)
Matrix atom_flip(int i, int j);          // |i><j| on the 4-level atom
Matrix small_identity(int dim);

// Total excitation operator Sum_f diag(weights_f) for the space.
Operator total_excitation(const HilbertSpace& space);

// Mode annihilation operators on a diamond or two-mode space.
Operator mode_a(const HilbertSpace& space);
Operator mode_b(const HilbertSpace& space);

// Basis ket with the given per-factor levels.
KetState basis_ket(const HilbertSpace& space, const std::vector<int>& levels);

Complex expectation(const Operator& op, const Vector& psi);       // <psi|op|psi>
Complex expectation(const Operator& op, const Matrix& rho);       // tr(op rho)

// Sparse Kronecker product with the same convention as the dense kron().
SpMat kron_sparse(const SpMat& a, const SpMat& b);

}  // namespace diamond
