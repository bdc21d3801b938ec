#pragma once

#include <Eigen/Dense>
#include <complex>

namespace diamond {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense matrix exponential by Pade approximation with scaling and squaring.
// Relative accuracy ~1e-12 for well-conditioned inputs. Throws on non-finite
// entries or norms large enough to make the squaring phase meaningless.
Matrix matrix_exponential(const Matrix& a);

struct EigResult {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns, orthonormal
};

// Eigendecomposition of a Hermitian matrix. Rejects inputs with
// ||A - A^dag|| > 1e-10 * (1 + ||A||).
EigResult hermitian_eig(const Matrix& a);

// Smallest real part over the spectrum of M. This is the decay rate of the
// slowest mode of exp(-M t); positive means strictly stable.
double spectral_abscissa(const Matrix& m);

struct SylvesterResult {
    Matrix x;         // d^2 x d^2
    double residual;  // Frobenius norm of (M(x)I)X + X(I(x)M^dag) - I
    int d;

    // Tensor element X_{i,k,j,l} = integral of [e^{-Mt}]_{ij} [e^{-M^dag t}]_{kl},
    // 0-based indices.
    Complex element(int i, int k, int j, int l) const {
        return x(i * d + k, j * d + l);
    }
};

// Solves (M(x)I) X + X (I(x)M^dag) = I(x)I, i.e. computes the integral of
// e^{-Mt} (x) e^{-M^dag t} over t in [0, inf). Requires M strictly stable;
// throws otherwise (the Sylvester operator would be singular).
SylvesterResult sylvester_solve(const Matrix& m);

// Kronecker products (dense). Row/col convention:
// (A(x)B)[i*rB + k, j*cB + l] = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace diamond
