#include "diamond/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

void require_compatible(const Operator& a, const Operator& b, const char* what) {
    if (!a.space.compatible(b.space))
        throw std::invalid_argument(std::string(what) + ": operators live on different spaces");
}

// Weight change of `small` on the given factor. Throws if the change is not
// the same for every nonzero element (such operators cannot be classified).
int uniform_weight_change(const Factor& f, const Matrix& small, const char* what) {
    bool found = false;
    int change = 0;
    for (int c = 0; c < small.cols(); ++c)
        for (int r = 0; r < small.rows(); ++r) {
            if (small(r, c) == Complex(0, 0)) continue;
            const int d = f.weights[r] - f.weights[c];
            if (!found) {
                change = d;
                found = true;
            } else if (d != change) {
                throw std::invalid_argument(
                    std::string(what) + ": operator on factor '" + f.label +
                    "' changes the excitation weight non-uniformly; it cannot be embedded "
                    "in a sector-restricted space");
            }
        }
    return found ? change : 0;
}

}  // namespace

Operator& Operator::operator+=(const Operator& o) {
    require_compatible(*this, o, "Operator::operator+");
    mat += o.mat;
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    require_compatible(*this, o, "Operator::operator-");
    mat -= o.mat;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    require_compatible(a, b, "Operator::operator*");
    return {a.space, SpMat(a.mat * b.mat)};
}

double DensityOperator::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> s((rho + rho.adjoint()) / 2.0);
    return s.eigenvalues().minCoeff();
}

Operator zero_operator(const HilbertSpace& space) {
    return {space, SpMat(space.dim(), space.dim())};
}

Operator identity_operator(const HilbertSpace& space) {
    SpMat m(space.dim(), space.dim());
    m.setIdentity();
    return {space, m};
}

Operator embed(const HilbertSpace& space, int factor, const Matrix& small) {
    return embed_product(space, {{factor, small}});
}

Operator embed_product(const HilbertSpace& space,
                       const std::vector<std::pair<int, Matrix>>& pieces) {
    const auto& factors = space.factors();
    int net_change = 0;
    for (const auto& [f, small] : pieces) {
        if (f < 0 || f >= space.num_factors())
            throw std::invalid_argument("embed: factor index out of range");
        if (small.rows() != factors[f].dim || small.cols() != factors[f].dim)
            throw std::invalid_argument("embed: operator dimension does not match factor '" +
                                        factors[f].label + "'");
        for (size_t j = 0; j < pieces.size(); ++j)
            if (&pieces[j].second != &small && pieces[j].first == f)
                throw std::invalid_argument("embed_product: duplicate factor");
        if (space.excitation_sector())
            net_change += uniform_weight_change(factors[f], small, "embed");
    }
    if (space.excitation_sector() && net_change != 0)
        throw std::invalid_argument(
            "embed: operator changes total excitation by " + std::to_string(net_change) +
            " and does not act within the sector-restricted space");

    std::vector<Eigen::Triplet<Complex>> trip;
    const long dim = space.dim();
    for (long b = 0; b < dim; ++b) {
        const long full = space.full_index(b);
        // Enumerate combinations of nonzero elements, one per piece.
        struct Choice {
            long shift;
            Complex amp;
        };
        std::vector<Choice> partial = {{0, Complex(1, 0)}};
        for (const auto& [f, small] : pieces) {
            const int col = space.level_at(full, f);
            std::vector<Choice> next;
            for (int r = 0; r < small.rows(); ++r) {
                const Complex v = small(r, col);
                if (v == Complex(0, 0)) continue;
                for (const auto& p : partial)
                    next.push_back({p.shift + (r - col) * space.stride(f), p.amp * v});
            }
            partial = std::move(next);
            if (partial.empty()) break;
        }
        for (const auto& p : partial) {
            const long target_full = full + p.shift;
            const auto row = space.find_full(target_full);
            if (!row)
                throw std::logic_error("embed: image left the restricted basis");
            trip.emplace_back(static_cast<int>(*row), static_cast<int>(b), p.amp);
        }
    }
    SpMat m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return {space, m};
}

Matrix fock_lowering(int dim) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

Matrix fock_number(int dim) {
    Matrix n = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = k;
    return n;
}

Matrix atom_flip(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3) throw std::invalid_argument("atom_flip: level out of range");
    Matrix s = Matrix::Zero(4, 4);
    s(i, j) = 1.0;
    return s;
}

Matrix small_identity(int dim) { return Matrix::Identity(dim, dim); }

Operator total_excitation(const HilbertSpace& space) {
    Operator out = zero_operator(space);
    for (int f = 0; f < space.num_factors(); ++f) {
        const auto& fac = space.factors()[f];
        Matrix w = Matrix::Zero(fac.dim, fac.dim);
        for (int l = 0; l < fac.dim; ++l) w(l, l) = fac.weights[l];
        out += embed(space, f, w);
    }
    return out;
}

Operator mode_a(const HilbertSpace& space) {
    if (space.excitation_sector())
        throw std::invalid_argument("mode_a: annihilation operator does not conserve the sector");
    return embed(space, 0, fock_lowering(space.factors()[0].dim));
}

Operator mode_b(const HilbertSpace& space) {
    if (space.excitation_sector())
        throw std::invalid_argument("mode_b: annihilation operator does not conserve the sector");
    return embed(space, 1, fock_lowering(space.factors()[1].dim));
}

KetState basis_ket(const HilbertSpace& space, const std::vector<int>& levels) {
    if (static_cast<int>(levels.size()) != space.num_factors())
        throw std::invalid_argument("basis_ket: one level per factor required");
    long full = 0;
    for (int f = 0; f < space.num_factors(); ++f) {
        if (levels[f] < 0 || levels[f] >= space.factors()[f].dim)
            throw std::invalid_argument("basis_ket: level out of range for factor " +
                                        space.factors()[f].label);
        full += levels[f] * space.stride(f);
    }
    const auto b = space.find_full(full);
    if (!b) throw std::invalid_argument("basis_ket: state is outside the excitation sector");
    Vector v = Vector::Zero(space.dim());
    v(*b) = 1.0;
    return {space, v, true};
}

Complex expectation(const Operator& op, const Vector& psi) { return psi.dot(op.mat * psi); }

Complex expectation(const Operator& op, const Matrix& rho) {
    return (Matrix(op.mat) * rho).trace();
}

SpMat kron_sparse(const SpMat& a, const SpMat& b) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<size_t>(a.nonZeros()) * b.nonZeros());
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
                    trip.emplace_back(ia.row() * b.rows() + ib.row(),
                                      ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
    SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

}  // namespace diamond
