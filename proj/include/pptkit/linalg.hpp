// linalg.hpp — dense complex-matrix primitives shared by the whole toolkit:
// Kronecker products, partial transpose/trace, Hermitian eigenvalues, PSD tests.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace pptkit {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index      = Eigen::Index;

// Every comparison in the toolkit is tolerance-based; eps is the one knob.
struct Tolerance {
    double eps = 1e-9;
};

// A square operator on H_A (x) H_B with the row-major index convention
// |i>_A |k>_B  ->  i*dB + k.
struct BipartiteOperator {
    Index dA = 0;
    Index dB = 0;
    Matrix matrix;

    BipartiteOperator() = default;
    BipartiteOperator(Index dA_, Index dB_, Matrix m);

    Index side() const { return dA * dB; }
};

enum class Subsystem { A, B };

struct PsdResult {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

// ---------------------------------------------------------------------------
// basic constructions

// |i><j| in d dimensions
Matrix basis_op(Index d, Index i, Index j);

// unnormalized maximally entangled vector sum_i |ii> in d (x) d
Vector maximally_entangled_vector(Index d);

// ---------------------------------------------------------------------------
// operations

Matrix kron(const Matrix& a, const Matrix& b);

// transpose on the B factor: <ik|X^G|jl> = <il|X|jk>
BipartiteOperator partial_transpose(const BipartiteOperator& x);

// keep == A gives Tr_B X (dA x dA); keep == B gives Tr_A X (dB x dB)
Matrix partial_trace(const BipartiteOperator& x, Subsystem keep);

// ||M - M^dag||_F
double hermiticity_defect(const Matrix& m);

// Ascending real spectrum of a Hermitian matrix. The Hermiticity gate
// (defect < tol.eps) must pass; eigenvalues are taken on (H + H^dag)/2.
RealVector hermitian_eigenvalues(const Matrix& h, Tolerance tol = {});

// flag is true iff the smallest eigenvalue is >= -tol.eps
PsdResult is_psd(const Matrix& h, Tolerance tol = {});

// Frobenius-norm equality: ||a - b||_F < tol. Shape mismatch compares unequal.
bool tol_equal(const Matrix& a, const Matrix& b, double tol = 1e-9);

}  // namespace pptkit
