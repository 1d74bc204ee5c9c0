#include "pptkit/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <sstream>

namespace pptkit {

Matrix amplitude_matrix(const PureState& v) {
    if (v.dA < 1 || v.dB < 1 || v.amplitudes.size() != v.dA * v.dB)
        throw std::invalid_argument("amplitude_matrix: amplitudes length must equal dA*dB");
    Matrix m(v.dA, v.dB);
    for (Index i = 0; i < v.dA; ++i)
        for (Index k = 0; k < v.dB; ++k) m(i, k) = v.amplitudes(i * v.dB + k);
    return m;
}

BipartiteOperator projector(const PureState& v) {
    if (v.amplitudes.size() != v.dA * v.dB)
        throw std::invalid_argument("projector: amplitudes length must equal dA*dB");
    return BipartiteOperator(v.dA, v.dB, v.amplitudes * v.amplitudes.adjoint());
}

int schmidt_rank(const PureState& v, Tolerance tol) {
    const Matrix m = amplitude_matrix(v);
    if (m.norm() == 0.0)
        throw std::invalid_argument("schmidt_rank: zero vector has no Schmidt decomposition");
    Eigen::JacobiSVD<Matrix> svd(m);
    const RealVector sv = svd.singularValues();  // descending
    const double threshold = tol.eps * sv(0);
    int rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return rank;
}

PptResult is_ppt_state(const BipartiteOperator& rho, Tolerance tol) {
    const PsdResult self = is_psd(rho.matrix, tol);
    if (!self.psd) {
        std::ostringstream msg;
        msg << "is_ppt_state: input is not PSD, lambda_min = " << self.min_eigenvalue;
        throw std::invalid_argument(msg.str());
    }
    const PsdResult pt = is_psd(partial_transpose(rho).matrix, tol);
    return {pt.psd, pt.min_eigenvalue};
}

double realignment_norm(const BipartiteOperator& rho) {
    if (!(hermiticity_defect(rho.matrix) < 1e-9))
        throw std::invalid_argument("realignment_norm: input must be Hermitian");
    const Index dA = rho.dA, dB = rho.dB;
    Matrix realigned(dA * dA, dB * dB);
    for (Index i = 0; i < dA; ++i)
        for (Index j = 0; j < dA; ++j)
            for (Index k = 0; k < dB; ++k)
                for (Index l = 0; l < dB; ++l)
                    realigned(i * dA + j, k * dB + l) = rho.matrix(i * dB + k, j * dB + l);
    Eigen::JacobiSVD<Matrix> svd(realigned);
    return svd.singularValues().sum();
}

SupportDims local_support_dims(const BipartiteOperator& rho, Tolerance tol) {
    const PsdResult self = is_psd(rho.matrix, tol);
    if (!self.psd) {
        std::ostringstream msg;
        msg << "local_support_dims: input is not PSD, lambda_min = " << self.min_eigenvalue;
        throw std::invalid_argument(msg.str());
    }
    auto rank_of = [&](const Matrix& marginal) {
        // The marginal of a tol-Hermitian operator can miss the gate by a hair;
        // symmetrize before taking the spectrum.
        const RealVector eigs =
            hermitian_eigenvalues(0.5 * (marginal + marginal.adjoint()), tol);
        const double largest = eigs(eigs.size() - 1);
        if (largest <= 0.0) return 0;
        int rank = 0;
        for (Index i = 0; i < eigs.size(); ++i)
            if (eigs(i) > tol.eps * largest) ++rank;
        return rank;
    };
    return {rank_of(partial_trace(rho, Subsystem::A)),
            rank_of(partial_trace(rho, Subsystem::B))};
}

DecompositionCheck validate_decomposition(const BipartiteOperator& rho,
                                          const PureDecomposition& dec,
                                          Tolerance tol) {
    if (dec.weights.size() != dec.vectors.size())
        throw std::invalid_argument("validate_decomposition: weights and vectors differ in length");
    Matrix sum = Matrix::Zero(rho.side(), rho.side());
    int max_rank = 0;
    for (std::size_t j = 0; j < dec.vectors.size(); ++j) {
        const PureState& v = dec.vectors[j];
        if (v.dA != rho.dA || v.dB != rho.dB) {
            std::ostringstream msg;
            msg << "validate_decomposition: vector " << j << " has dims (" << v.dA << ","
                << v.dB << "), state has (" << rho.dA << "," << rho.dB << ")";
            throw std::invalid_argument(msg.str());
        }
        if (dec.weights[j] <= 0.0)
            throw std::invalid_argument("validate_decomposition: weights must be positive");
        sum += dec.weights[j] * (v.amplitudes * v.amplitudes.adjoint());
        max_rank = std::max(max_rank, schmidt_rank(v, tol));
    }
    const double defect = (rho.matrix - sum).norm();
    return {defect < tol.eps, defect, max_rank};
}

}  // namespace pptkit
