// channel.hpp — quantum channels in Kraus form: application, Choi matrices,
// composition, trace-preservation and PPT tests, seeded random channels.

#pragma once

#include "pptkit/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pptkit {

// Lambda(X) = sum_i A_i X A_i^dag with every A_i of shape d_out x d_in.
// Completely positive by construction; trace preservation is a separate check.
struct KrausChannel {
    Index d_in = 0;
    Index d_out = 0;
    std::vector<Matrix> kraus;
};

struct TpResult {
    bool trace_preserving = false;
    double defect = 0.0;  // ||sum A_i^dag A_i - I||_F
};

struct PptResult {
    bool ppt = false;
    double witness = 0.0;  // smallest eigenvalue of the partially transposed object
};

// Validates shapes and infers (d_in, d_out); operators are stored verbatim.
KrausChannel make_channel(std::vector<Matrix> kraus);

Matrix apply_channel(const KrausChannel& ch, const Matrix& x);

TpResult is_trace_preserving(const KrausChannel& ch, Tolerance tol = {});

// (I (x) Lambda)(sum_ij |ii><jj|) with dA = d_in, dB = d_out.
// Unnormalized convention: trace = d_in for trace-preserving channels.
BipartiteOperator choi_matrix(const KrausChannel& ch);

// Kraus list of outer∘inner: all products A_i B_j in lexicographic (i, j)
// order, dropping those with Frobenius norm < prune_tol.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner,
                     Tolerance prune_tol = Tolerance{1e-12});

// PPT iff the partial transpose of the Choi matrix is PSD.
PptResult is_ppt_channel(const KrausChannel& ch, Tolerance tol = {});

// (I_dA (x) Lambda)(rho), realized as sum_i (I (x) A_i) rho (I (x) A_i)^dag.
BipartiteOperator apply_to_B(const KrausChannel& ch, const BipartiteOperator& rho);

// Deterministic in seed: a Haar-ish random isometry C^d -> C^(d*k) sliced into
// k Kraus blocks, so the result is trace-preserving to machine precision.
KrausChannel random_cptp(Index d, int k, std::uint64_t seed);

// Rejection sampler for PPT channels: draws random_cptp until is_ppt_channel
// accepts. attempts reports the number of draws; no acceptance rate is
// guaranteed, channel is empty when max_attempts draws all fail.
struct PptSample {
    std::optional<KrausChannel> channel;
    int attempts = 0;
};
PptSample sample_ppt_channel(Index d, int k, std::uint64_t seed,
                             int max_attempts = 1000, Tolerance tol = {});

}  // namespace pptkit
