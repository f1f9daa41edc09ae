#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "helmgraph/intmatrix.hpp"

namespace helm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// arbitrary-precision intermediates.  No floating tolerance is involved.
std::size_t exact_rank(const IntMatrix& m);

/// Linearly independent rational vectors of common length.
struct RationalBasis {
    std::vector<std::vector<BigRational>> vectors;

    std::size_t dimension() const noexcept { return vectors.size(); }
    std::size_t vector_length() const noexcept {
        return vectors.empty() ? 0 : vectors.front().size();
    }
};

/// Exact basis of { x : M x = 0 } over the rationals; every returned vector
/// is verified by exact substitution.
RationalBasis kernel_basis(const IntMatrix& m);

/// All eigenvalues of a symmetric integer matrix, ascending.  Symmetry is
/// checked exactly; throws NotSymmetricError.  `tol` is the relative
/// accuracy the caller intends to read the values at (reporting only; the
/// solver is accurate to machine precision at this scale).
std::vector<double> symmetric_eigenvalues(const IntMatrix& m, double tol = 1e-9);

/// Count of eigenvalues below rel_tol * max(1, spectral radius) in an
/// ascending eigenvalue list.  Reporting helper, never used for rank.
std::size_t near_zero_count(const std::vector<double>& ascending, double rel_tol = 1e-9);

struct LeastSquaresResult {
    std::vector<double> coefficients;  // minimum-norm on rank deficiency
    std::vector<double> projection;    // M * coefficients
    std::vector<double> residual;      // f - projection, orthogonal to col(M)
};

/// Minimizes ||M x - f||_2; the residual is orthogonal to the column space
/// of M and the coefficients are the minimum-norm solution.
LeastSquaresResult least_squares_project(const IntMatrix& m, const std::vector<double>& f);

}  // namespace helm
