#include "pptkit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <sstream>

namespace pptkit {

BipartiteOperator::BipartiteOperator(Index dA_, Index dB_, Matrix m)
    : dA(dA_), dB(dB_), matrix(std::move(m)) {
    if (dA < 1 || dB < 1)
        throw std::invalid_argument("BipartiteOperator: subsystem dimensions must be positive");
    if (matrix.rows() != matrix.cols() || matrix.rows() != dA * dB) {
        std::ostringstream msg;
        msg << "BipartiteOperator: matrix is " << matrix.rows() << "x" << matrix.cols()
            << ", expected square of side dA*dB = " << dA * dB;
        throw std::invalid_argument(msg.str());
    }
}

Matrix basis_op(Index d, Index i, Index j) {
    if (d < 1) throw std::invalid_argument("basis_op: dimension must be positive");
    if (i < 0 || i >= d || j < 0 || j >= d)
        throw std::out_of_range("basis_op: index out of range");
    Matrix m = Matrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

Vector maximally_entangled_vector(Index d) {
    if (d < 1) throw std::invalid_argument("maximally_entangled_vector: dimension must be positive");
    Vector v = Vector::Zero(d * d);
    for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

BipartiteOperator partial_transpose(const BipartiteOperator& x) {
    const Index dA = x.dA, dB = x.dB;
    Matrix out(x.side(), x.side());
    for (Index i = 0; i < dA; ++i)
        for (Index j = 0; j < dA; ++j)
            for (Index k = 0; k < dB; ++k)
                for (Index l = 0; l < dB; ++l)
                    out(i * dB + k, j * dB + l) = x.matrix(i * dB + l, j * dB + k);
    return BipartiteOperator(dA, dB, std::move(out));
}

Matrix partial_trace(const BipartiteOperator& x, Subsystem keep) {
    const Index dA = x.dA, dB = x.dB;
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dA, dA);
        for (Index i = 0; i < dA; ++i)
            for (Index j = 0; j < dA; ++j)
                for (Index k = 0; k < dB; ++k)
                    out(i, j) += x.matrix(i * dB + k, j * dB + k);
        return out;
    }
    Matrix out = Matrix::Zero(dB, dB);
    for (Index k = 0; k < dB; ++k)
        for (Index l = 0; l < dB; ++l)
            for (Index i = 0; i < dA; ++i)
                out(k, l) += x.matrix(i * dB + k, i * dB + l);
    return out;
}

double hermiticity_defect(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).norm();
}

RealVector hermitian_eigenvalues(const Matrix& h, Tolerance tol) {
    const double defect = hermiticity_defect(h);
    if (!(defect < tol.eps)) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: input not Hermitian, ||H - H^dag||_F = " << defect;
        throw std::invalid_argument(msg.str());
    }
    // Hermitize to suppress round-off asymmetry once the gate has passed.
    Matrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    return solver.eigenvalues();  // ascending
}

PsdResult is_psd(const Matrix& h, Tolerance tol) {
    if (h.rows() == 0) return {true, 0.0};
    const RealVector eigs = hermitian_eigenvalues(h, tol);
    const double lambda_min = eigs(0);
    return {lambda_min >= -tol.eps, lambda_min};
}

bool tol_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).norm() < tol;
}

}  // namespace pptkit
