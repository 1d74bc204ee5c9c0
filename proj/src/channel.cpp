#include "pptkit/channel.hpp"

#include <Eigen/QR>

#include <random>
#include <sstream>

namespace pptkit {

KrausChannel make_channel(std::vector<Matrix> kraus) {
    if (kraus.empty())
        throw std::invalid_argument("make_channel: Kraus list must be nonempty");
    const Index d_out = kraus.front().rows();
    const Index d_in = kraus.front().cols();
    if (d_out < 1 || d_in < 1)
        throw std::invalid_argument("make_channel: Kraus operators must be nonempty matrices");
    for (std::size_t i = 0; i < kraus.size(); ++i) {
        if (kraus[i].rows() != d_out || kraus[i].cols() != d_in) {
            std::ostringstream msg;
            msg << "make_channel: operator " << i << " is " << kraus[i].rows() << "x"
                << kraus[i].cols() << ", expected " << d_out << "x" << d_in;
            throw std::invalid_argument(msg.str());
        }
    }
    return KrausChannel{d_in, d_out, std::move(kraus)};
}

Matrix apply_channel(const KrausChannel& ch, const Matrix& x) {
    if (x.rows() != ch.d_in || x.cols() != ch.d_in) {
        std::ostringstream msg;
        msg << "apply_channel: input is " << x.rows() << "x" << x.cols()
            << ", channel expects " << ch.d_in << "x" << ch.d_in;
        throw std::invalid_argument(msg.str());
    }
    Matrix out = Matrix::Zero(ch.d_out, ch.d_out);
    for (const Matrix& a : ch.kraus) out += a * x * a.adjoint();
    return out;
}

TpResult is_trace_preserving(const KrausChannel& ch, Tolerance tol) {
    Matrix sum = Matrix::Zero(ch.d_in, ch.d_in);
    for (const Matrix& a : ch.kraus) sum += a.adjoint() * a;
    const double defect = (sum - Matrix::Identity(ch.d_in, ch.d_in)).norm();
    return {defect < tol.eps, defect};
}

BipartiteOperator choi_matrix(const KrausChannel& ch) {
    const Vector psi = maximally_entangled_vector(ch.d_in);
    const BipartiteOperator psi_proj(ch.d_in, ch.d_in, psi * psi.adjoint());
    return apply_to_B(ch, psi_proj);
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner,
                     Tolerance prune_tol) {
    if (inner.d_out != outer.d_in) {
        std::ostringstream msg;
        msg << "compose: inner d_out = " << inner.d_out << " does not match outer d_in = "
            << outer.d_in;
        throw std::invalid_argument(msg.str());
    }
    std::vector<Matrix> products;
    products.reserve(outer.kraus.size() * inner.kraus.size());
    for (const Matrix& a : outer.kraus)
        for (const Matrix& b : inner.kraus) {
            Matrix p = a * b;
            if (p.norm() >= prune_tol.eps) products.push_back(std::move(p));
        }
    if (products.empty())  // fully pruned; keep a single zero operator so the
        products.push_back(Matrix::Zero(outer.d_out, inner.d_in));  // channel stays well-formed
    return KrausChannel{inner.d_in, outer.d_out, std::move(products)};
}

PptResult is_ppt_channel(const KrausChannel& ch, Tolerance tol) {
    const BipartiteOperator pt = partial_transpose(choi_matrix(ch));
    const PsdResult r = is_psd(pt.matrix, tol);
    return {r.psd, r.min_eigenvalue};
}

BipartiteOperator apply_to_B(const KrausChannel& ch, const BipartiteOperator& rho) {
    if (rho.dB != ch.d_in) {
        std::ostringstream msg;
        msg << "apply_to_B: state dB = " << rho.dB << " does not match channel d_in = "
            << ch.d_in;
        throw std::invalid_argument(msg.str());
    }
    const Matrix id_a = Matrix::Identity(rho.dA, rho.dA);
    Matrix out = Matrix::Zero(rho.dA * ch.d_out, rho.dA * ch.d_out);
    for (const Matrix& a : ch.kraus) {
        const Matrix lifted = kron(id_a, a);
        out += lifted * rho.matrix * lifted.adjoint();
    }
    return BipartiteOperator(rho.dA, ch.d_out, std::move(out));
}

KrausChannel random_cptp(Index d, int k, std::uint64_t seed) {
    if (d < 1 || k < 1)
        throw std::invalid_argument("random_cptp: d and k must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(d * k, d);
    for (Index r = 0; r < g.rows(); ++r)
        for (Index c = 0; c < g.cols(); ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = Complex(re, im);
        }
    // Thin QR of a Ginibre matrix gives an isometry C^d -> C^(dk).
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix isometry = qr.householderQ() * Matrix::Identity(d * k, d);
    std::vector<Matrix> kraus;
    kraus.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) kraus.push_back(isometry.middleRows(Index(i) * d, d));
    return KrausChannel{d, d, std::move(kraus)};
}

PptSample sample_ppt_channel(Index d, int k, std::uint64_t seed, int max_attempts,
                             Tolerance tol) {
    PptSample sample;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        KrausChannel ch = random_cptp(d, k, seed + static_cast<std::uint64_t>(attempt));
        ++sample.attempts;
        if (is_ppt_channel(ch, tol).ppt) {
            sample.channel = std::move(ch);
            break;
        }
    }
    return sample;
}

}  // namespace pptkit
