#include "diamond/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diamond {

namespace {

// Pade numerator of order m applied to A; denominator is the same polynomial
// at -A. Coefficients from the standard degree-13 scheme.
Matrix pade13(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const long n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * id);
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    return u + v;
}

Matrix pade_low(const Matrix& a, int m, Matrix& u, Matrix& v) {
    static const double b3[] = {120.0, 60.0, 12.0, 1.0};
    static const double b5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
    static const double b7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                25200.0,    1512.0,    56.0,      1.0};
    static const double b9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                30270240.0,    2162160.0,    110880.0,     3960.0,
                                90.0,          1.0};
    const double* b = m == 3 ? b3 : m == 5 ? b5 : m == 7 ? b7 : b9;
    const long n = a.rows();
    Matrix apow = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    u = b[1] * Matrix::Identity(n, n);
    v = b[0] * Matrix::Identity(n, n);
    for (int k = 2; k <= m; k += 2) {
        apow = apow * a2;
        v += b[k] * apow;
        if (k + 1 <= m) u += b[k + 1] * apow;
    }
    u = a * u;
    return u + v;
}

}  // namespace

Matrix matrix_exponential(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exponential: non-square input");
    if (!a.allFinite()) throw std::invalid_argument("matrix_exponential: non-finite entries");

    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
    if (norm > 1e6)
        throw std::overflow_error("matrix_exponential: norm " + std::to_string(norm) +
                                  " too large for reliable scaling-and-squaring");

    // Degree thresholds from the Higham scaling-and-squaring analysis.
    static const double theta3 = 1.495585217958292e-2, theta5 = 2.539398330063230e-1,
                        theta7 = 9.504178996162932e-1, theta9 = 2.097847961257068,
                        theta13 = 5.371920351148152;

    Matrix u, v;
    if (norm <= theta9) {
        int m = norm <= theta3 ? 3 : norm <= theta5 ? 5 : norm <= theta7 ? 7 : 9;
        Matrix num = pade_low(a, m, u, v);
        return (v - u).partialPivLu().solve(num);
    }

    int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    Matrix scaled = a / std::pow(2.0, squarings);
    Matrix num = pade13(scaled, u, v);
    Matrix r = (v - u).partialPivLu().solve(num);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

EigResult hermitian_eig(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: non-square input");
    const double dev = (a - a.adjoint()).norm();
    if (dev > 1e-10 * (1.0 + a.norm()))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian (||A - A^dag|| = " +
                                    std::to_string(dev) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> solver((a + a.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_abscissa(const Matrix& m) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectral_abscissa: eigensolver failed");
    return solver.eigenvalues().real().minCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

SylvesterResult sylvester_solve(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("sylvester_solve: non-square input");
    const int d = static_cast<int>(m.rows());
    const double abscissa = spectral_abscissa(m);
    if (abscissa <= 0.0) {
        std::ostringstream msg;
        msg << "sylvester_solve: M is not strictly stable (min Re eigenvalue = " << abscissa
            << "); the spectra of M and -M^dag overlap and the system is singular";
        throw std::invalid_argument(msg.str());
    }

    const int dd = d * d;
    const Matrix id = Matrix::Identity(d, d);
    const Matrix k1 = kron(m, id);            // M (x) I
    const Matrix k2 = kron(id, m.adjoint());  // I (x) M^dag

    // Vectorize K1 X + X K2 = I (column-major): (I (x) K1 + K2^T (x) I) vec(X) = vec(I).
    const Matrix idd = Matrix::Identity(dd, dd);
    Matrix big = kron(idd, k1) + kron(k2.transpose(), idd);
    Vector rhs = idd.reshaped();
    Eigen::PartialPivLU<Matrix> lu(big);
    Vector xv = lu.solve(rhs);
    // One step of iterative refinement keeps the residual near round-off.
    xv += lu.solve(rhs - big * xv);

    SylvesterResult res;
    res.d = d;
    res.x = xv.reshaped(dd, dd);
    res.residual = (k1 * res.x + res.x * k2 - idd).norm();
    if (res.residual > 1e-10 * idd.norm()) {
        std::ostringstream msg;
        msg << "sylvester_solve: residual " << res.residual
            << " exceeds tolerance; system is near-singular (min Re eigenvalue = " << abscissa
            << ")";
        throw std::runtime_error(msg.str());
    }
    return res;
}

}  // namespace diamond
