#pragma once

#include "helmgraph/incidence.hpp"

namespace helm {

/// The m x m symmetric positive-semidefinite matrix H = B B^T + C^T C.
/// Diagonal entries are triangle_degree(e) + 2; off-diagonals lie in
/// {-1, 0, 1}.  Stored dense up to kHelmholtzianDenseLimit edges.
struct HelmholtzianMatrix {
    enum class Provenance { ProductForm, Entrywise, VerifiedBoth };

    IntMatrix matrix;
    Provenance provenance = Provenance::Entrywise;
};

inline constexpr std::size_t kHelmholtzianDenseLimit = 512;

/// H = B B^T + C^T C by explicit integer matrix products.
HelmholtzianMatrix assemble_product(const EdgeVertexIncidence& b,
                                    const TriangleEdgeIncidence& c);

/// H built entry by entry from the adjacency relations between oriented
/// edges, without forming B or C:
///   h(e,e)   = triangle_degree(e) + 2
///   h(e,e')  = -1  head-to-tail contact, not in a common triangle
///   h(e,e')  = +1  shared head or shared tail, not in a common triangle
///   h(e,e')  =  0  otherwise.
HelmholtzianMatrix assemble_entrywise(const OrientedComplex& c);

struct EquivalenceReport {
    bool equal = true;
    // first discrepancy when !equal; expected is the product form entry
    std::size_t row = 0;
    std::size_t col = 0;
    long long expected = 0;
    long long got = 0;
};

/// Builds H both ways and compares entrywise as integers.
EquivalenceReport verify_equivalence(const OrientedComplex& c);

/// Entrywise assembly cross-checked against the product form; throws
/// VerificationError if the two routes disagree.
HelmholtzianMatrix assemble_verified(const OrientedComplex& c);

}  // namespace helm
