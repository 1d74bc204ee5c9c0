// states.hpp — bipartite-state analytics: Schmidt rank, PPT test, realignment,
// local support dimensions, and validation of supplied pure-state decompositions.

#pragma once

#include "pptkit/channel.hpp"
#include "pptkit/linalg.hpp"

#include <vector>

namespace pptkit {

// Unnormalized pure vector on C^dA (x) C^dB, amplitude of |i>_A|k>_B at i*dB + k.
struct PureState {
    Index dA = 0;
    Index dB = 0;
    Vector amplitudes;
};

// Claimed rho = sum_j weights[j] |vectors[j]><vectors[j]|; checked, never trusted.
struct PureDecomposition {
    std::vector<double> weights;
    std::vector<PureState> vectors;
};

struct SupportDims {
    int rA = 0;
    int rB = 0;
};

struct DecompositionCheck {
    bool valid = false;
    double defect = 0.0;       // ||rho - sum_j p_j |a_j><a_j|||_F
    int max_schmidt_rank = 0;  // over the supplied components
};

// dA x dB amplitude matrix M(i, k) = amplitudes[i*dB + k]
Matrix amplitude_matrix(const PureState& v);

// |v><v| as a bipartite operator
BipartiteOperator projector(const PureState& v);

// Number of singular values of the amplitude matrix above tol.eps * (largest
// singular value). The relative threshold keeps unnormalized vectors uniform.
int schmidt_rank(const PureState& v, Tolerance tol = {});

// Requires rho Hermitian PSD; flag true iff rho^G is PSD.
PptResult is_ppt_state(const BipartiteOperator& rho, Tolerance tol = {});

// Trace norm of the realigned matrix R(rho)_{(i,j),(k,l)} = rho_{(i,k),(j,l)}.
// For a normalized state, > 1 certifies entanglement; <= 1 is inconclusive.
double realignment_norm(const BipartiteOperator& rho);

// Ranks of the two marginals at threshold tol.eps * (largest marginal eigenvalue).
SupportDims local_support_dims(const BipartiteOperator& rho, Tolerance tol = {});

DecompositionCheck validate_decomposition(const BipartiteOperator& rho,
                                          const PureDecomposition& dec,
                                          Tolerance tol = {});

}  // namespace pptkit
