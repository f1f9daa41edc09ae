#pragma once

#include <vector>

#include "helmgraph/graph.hpp"
#include "helmgraph/intmatrix.hpp"

namespace helm {

/// m x n matrix B: row e has -1 at the tail column and +1 at the head column.
struct EdgeVertexIncidence {
    IntMatrix matrix;
};

/// t x m matrix C: row of a triangle has +1 on edges whose orientation
/// agrees with the cyclic orientation and -1 on the others.
struct TriangleEdgeIncidence {
    IntMatrix matrix;
};

/// 0-cochain: one real value per vertex, ascending id order.
struct VertexPotential {
    std::vector<double> values;
};

/// 1-cochain: one real value per edge, in the edge's stored orientation
/// (the alternating extension f(v,u) = -f(u,v) is implicit).
struct EdgeFlow {
    std::vector<double> values;
};

/// 2-cochain: one real value per triangle, in the stored cyclic orientation.
struct TriangleCochain {
    std::vector<double> values;
};

EdgeVertexIncidence build_b(const OrientedComplex& c);
TriangleEdgeIncidence build_c(const OrientedComplex& c);

/// Difference operator applied per edge: (grad p)(u -> v) = p(v) - p(u).
/// Equals B * p.
EdgeFlow grad(const OrientedComplex& c, const VertexPotential& p);

/// Cyclic sum around each triangle (a, b, c):
/// f(a,b) + f(b,c) + f(c,a).  Equals C * f.
TriangleCochain curl(const OrientedComplex& c, const EdgeFlow& f);

/// Star sum at each vertex: sum of f over edges leaving the vertex minus the
/// sum over edges entering it.  This is the adjoint convention
/// div = -grad*, i.e. divergence(f) = -B^T f, so divergence(grad p) = -(B^T B) p.
VertexPotential divergence(const OrientedComplex& c, const EdgeFlow& f);

}  // namespace helm
