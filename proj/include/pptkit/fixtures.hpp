// fixtures.hpp — the bundled 4x4 worked example: a PPT entangled state rho2,
// the PPT channel phi extracted from it, the intermediate state sigma, the
// twice-mapped state gamma, and an end-to-end verification of the whole
// construction.
//
// Everything is kept unnormalized, exactly as constructed; PSD/PPT checks are
// scale-invariant so no renormalization is performed anywhere.

#pragma once

#include "pptkit/channel.hpp"
#include "pptkit/linalg.hpp"
#include "pptkit/report.hpp"
#include "pptkit/states.hpp"

#include <array>
#include <vector>

namespace pptkit::fixtures {

// a = b = sqrt(3)/2 and c = 1 solve 4a^2 = 4b^2 = 3c^2 = 3, which is exactly
// what makes Tr_B sigma = I_4 (so phi is trace-preserving).
struct FixtureConstants {
    double a;
    double b;
    double c;
    std::array<double, 4> D_diag;  // the rebalancing filter D = diag(4,4,3,3)
};
FixtureConstants constants();

// rho2 = rho3 + rho4: two coherent rank-one triples plus eight diagonal
// projectors, on C^4 (x) C^4. rho2 is PPT yet entangled.
BipartiteOperator rho2();
// (|00>+|11>+|22>)(h.c.) + |02><02| + |20><20| + |12><12| + |21><21|
BipartiteOperator rho3();
// (|01>+|10>+|33>)(h.c.) + |03><03| + |31><31| + |13><13| + |30><30|
BipartiteOperator rho4();

// The ten Kraus operators P_1..P_10 of the channel phi: C^4 -> C^4 read off
// the rank-one pieces of sigma. Trace-preserving and PPT.
KrausChannel fixture_channel();

// sigma two ways: as the local filter (1/3)(diag(a,b,c,1) (x) I) rho2 (...)^dag,
// and as (I (x) phi) applied to the unnormalized maximally entangled projector.
// The two constructions coincide.
struct SigmaPair {
    BipartiteOperator via_filter;
    BipartiteOperator via_channel;
};
SigmaPair sigma_two_ways();
BipartiteOperator sigma();  // the via_channel construction

// gamma = (I (x) D) (I (x) phi∘phi)(|psi><psi|) (I (x) D), computed entirely
// from the Kraus operators.
BipartiteOperator gamma_computed();

// Hand-transcribed coefficient table for gamma, kept as a cross-check against
// gamma_computed(); the two disagree on a few coordinates (see coordinate_diff).
BipartiteOperator gamma_transcribed();

// The transcribed table of the 44 nonzero products P_i P_j, by 1-based (i, j).
struct LabeledProduct {
    int i;
    int j;
    Matrix op;
};
std::vector<LabeledProduct> composed_products_transcribed();

// Coordinates where two same-shape matrices differ by more than tol.
struct CoordinateDiff {
    Index row;
    Index col;
    Complex lhs;
    Complex rhs;
};
std::vector<CoordinateDiff> coordinate_diff(const Matrix& lhs, const Matrix& rhs,
                                            double tol = 1e-9);

// Runs the full pipeline: trace preservation, the sigma consistency pair, all
// PPT checks, the 44-product count, the block-split certification of gamma,
// the rho3/rho4 convex-split pathway, the realignment report for rho2, and
// the informational transcription diffs. Deterministic for a fixed tolerance.
VerificationReport verify_worked_example(Tolerance tol = {});

}  // namespace pptkit::fixtures
