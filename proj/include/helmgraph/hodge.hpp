#pragma once

#include <vector>

#include "helmgraph/exact.hpp"
#include "helmgraph/helmholtzian.hpp"

namespace helm {

/// Exact vs. predicted nullity bookkeeping.
///
/// eta_exact = m - rank([B^T; C]) = m - rank_b - rank_c is authoritative;
/// eta_predicted = m - n - t + omega is the closed form, which is exact only
/// under triangle-boundary independence (rank_c == t).  K4 is the standard
/// graph where the two disagree.
struct NullityReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t omega = 0;
    std::size_t rank_b = 0;
    std::size_t rank_c = 0;
    std::size_t eta_exact = 0;
    long long eta_predicted = 0;  // may be negative
    bool triangles_independent = true;
    std::vector<NullityReport> components;  // per connected component
};

NullityReport nullity_exact(const OrientedComplex& c);

/// m - n - t + omega, verbatim; negative output signals that the formula's
/// implicit independence hypothesis fails.
long long nullity_predicted(const OrientedComplex& c);

/// m - n - eta_exact + omega.  Equals rank(C) always, and the true triangle
/// count exactly when the triangles are independent.
long long triangle_count_predicted(const OrientedComplex& c);

/// Exact rational basis of ker H; each vector satisfies B^T x = 0 and
/// C x = 0 exactly, and the basis size equals eta_exact.
RationalBasis harmonic_basis(const OrientedComplex& c);

/// The three-part orthogonal splitting of an edge flow:
/// f = gradient_part + harmonic_part + curl_part with
/// gradient_part in im(B), curl_part in im(C^T), harmonic_part in ker(H).
struct HodgeDecomposition {
    EdgeFlow gradient_part;
    EdgeFlow harmonic_part;
    EdgeFlow curl_part;
    VertexPotential potential;             // min-norm preimage of gradient_part
    TriangleCochain triangle_coefficients; // preimage of curl_part
    double reconstruction_error = 0.0;     // ||f - sum of parts|| / max(1, ||f||)
    double max_pairwise_inner_product = 0.0;  // max |<a,b>| / max(1, ||f||^2)
};

HodgeDecomposition helmholtz_decompose(const OrientedComplex& c, const EdgeFlow& f);

/// Global score per vertex from a pairwise-comparison flow, plus the share
/// of the flow's energy in each component of the decomposition.
struct RankingResult {
    VertexPotential potential;  // mean zero on each connected component
    double consistency_ratio = 0.0;  // ||gradient_part||^2 / ||f||^2
    double harmonic_ratio = 0.0;
    double curl_ratio = 0.0;
    bool degenerate = false;  // zero input flow; ratios reported as 0
};

RankingResult rank_flows(const OrientedComplex& c, const EdgeFlow& f);

/// One recomputation of the exact nullity after a structural transformation,
/// compared with the relation the transformation is supposed to satisfy.
struct StructuralCheck {
    enum class Kind { PendantDeletion, CutEdgeContraction, EdgeSubdivision };

    Kind kind;
    VertexId vertex = -1;      // pendant deletion target
    std::size_t edge = 0;      // contraction / subdivision target
    VertexId edge_tail = -1;
    VertexId edge_head = -1;
    std::size_t triangle_degree = 0;  // of the edge, subdivision only
    long long eta_before = 0;
    long long eta_after = 0;
    long long eta_expected = 0;
    bool holds = false;
    bool ti_before = false;  // triangles_independent on each side
    bool ti_after = false;
};

struct StructuralReport {
    std::vector<StructuralCheck> checks;
    bool all_hold() const;
};

/// Applies every admissible pendant deletion, cut-edge contraction and edge
/// subdivision, recomputes the exact nullity, and reports whether the
/// expected relation holds.  Subdivision failures are legitimate output:
/// they flag graphs whose triangle boundaries are dependent.
StructuralReport structural_nullity_checks(const OrientedComplex& c);

}  // namespace helm
