// separability.hpp — sufficient-condition separability certifiers.
//
// Each certifier returns a proof tree. A `certified` verdict means every leaf
// passed its stated criterion and every recorded residual is below tolerance;
// `refuted` is only ever produced from an explicit negativity witness (an NPT
// eigenvalue); everything else is `inconclusive` — a sufficient method that
// fails to apply never refutes.
//
// All certifiers normalize their input by its trace internally, so verdicts
// are invariant under multiplication by a positive scalar. Recorded witnesses
// refer to the normalized operator; recorded components are rescaled back so
// their weighted sum reconstructs the original-scale target.

#pragma once

#include "pptkit/channel.hpp"
#include "pptkit/states.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pptkit {

enum class Verdict { certified, refuted, inconclusive };

using Witnesses = std::vector<std::pair<std::string, double>>;

struct CertComponent {
    double weight = 1.0;
    BipartiteOperator op;
    std::string descriptor;
};

struct SeparabilityCertificate {
    Verdict verdict = Verdict::inconclusive;
    std::string method;
    Witnesses witnesses;
    std::vector<SeparabilityCertificate> children;
    // When present, sum_k weight_k * op_k tol-equals the certified operator
    // (for block_split, the certified operator is the partial transpose of
    // the input; see certify_block_split).
    std::vector<CertComponent> components;
};

const char* to_string(Verdict v);

// Peres–Horodecki. NPT partial transpose refutes in any dimension. A PSD
// partial transpose certifies exactly where PPT is sufficient: dA*dB <= 6 or
// a trivial factor (min(dA,dB) == 1); larger dimensions are inconclusive.
SeparabilityCertificate certify_peres_horodecki(const BipartiteOperator& rho,
                                                Tolerance tol = {});

// Splits rho^G (dA == dB required) into a nonnegative diagonal remainder plus
// one 2x2-on-each-side block per index pair (i, j), each block collecting all
// coherences among the kets {|ii>, |ij>, |ji>, |jj>} together with an
// allocated share of the diagonal. Every block must pass the 2x2
// Peres–Horodecki test, which makes rho^G — and therefore rho — separable.
// Coherences that fit no pair block, or a failed diagonal allocation, give
// `inconclusive` (never `refuted`).
SeparabilityCertificate certify_block_split(const BipartiteOperator& rho,
                                            Tolerance tol = {});

// Certifies apply_to_B(ch, rho) separable from a supplied pure-state
// decomposition of rho whose components all have Schmidt rank <= 2:
// each component image is compressed onto its (<= 2-dimensional) A-side
// support and the resulting 2 (x) d_out state is settled by Peres–Horodecki.
// Requires ch.d_in == rho.dB and ch.d_out <= 3. The channel need not be
// trace-preserving. A component whose compression is NPT makes the overall
// verdict inconclusive, with the component index as witness.
SeparabilityCertificate certify_schmidt2_pipeline(const KrausChannel& ch,
                                                  const BipartiteOperator& rho,
                                                  const PureDecomposition& dec,
                                                  Tolerance tol = {});

// Convexity combinator: a certificate for sum_k parts[k] given a certified
// certificate for every part. Throws if any part is non-PSD or any child
// certificate is not `certified`. When `total` is supplied, the parts must
// tol-equal it in sum.
SeparabilityCertificate certify_convex_split(
    const std::vector<std::pair<BipartiteOperator, SeparabilityCertificate>>& parts,
    const BipartiteOperator* total = nullptr, Tolerance tol = {});

}  // namespace pptkit
