#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "helmgraph/types.hpp"

namespace helm {

/// Below this nonzero density a matrix built from triplets is stored sparse.
inline constexpr double kSparseDensityThreshold = 0.25;

/// Integer matrix with a dual dense / compressed-row representation.
///
/// Entries are a signed machine word; all matrices handled in this library
/// have entries bounded by the triangle degree + 2, so products stay far
/// from overflow.  Arbitrary-precision elimination lives in exact.hpp.
class IntMatrix {
public:
    enum class Storage { Dense, Sparse };

    struct Triplet {
        std::size_t row;
        std::size_t col;
        long long value;
    };

    IntMatrix() = default;

    static IntMatrix zeros(std::size_t rows, std::size_t cols,
                           Storage storage = Storage::Dense);
    static IntMatrix identity(std::size_t n);
    /// Duplicate (row, col) pairs are summed.  Unless forced, storage is
    /// sparse when the nonzero density is below kSparseDensityThreshold.
    static IntMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets,
                                   std::optional<Storage> force = std::nullopt);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzero_count() const;
    Storage storage() const noexcept { return storage_; }

    long long at(std::size_t i, std::size_t j) const;

    /// Calls f(row, col, value) for every structurally stored nonzero,
    /// rows ascending, columns ascending within a row.
    template <class F>
    void for_each_nonzero(F&& f) const {
        if (storage_ == Storage::Dense) {
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    if (long long v = dense_[i * cols_ + j]; v != 0) f(i, j, v);
        } else {
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
                    f(i, col_idx_[k], values_[k]);
        }
    }

    IntMatrix transpose() const;
    IntMatrix multiplied_by(const IntMatrix& rhs) const;
    IntMatrix plus(const IntMatrix& rhs) const;
    /// [top; bottom] with matching column counts.
    static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

    /// M x; T needs +, * and construction from long long (double, BigRational, ...).
    template <class T>
    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_)
            throw DimensionMismatchError("matrix-vector size mismatch");
        std::vector<T> y(rows_, T(0));
        for_each_nonzero([&](std::size_t i, std::size_t j, long long v) {
            y[i] += T(v) * x[j];
        });
        return y;
    }

    /// M^T x without materializing the transpose.
    template <class T>
    std::vector<T> apply_transposed(const std::vector<T>& x) const {
        if (x.size() != rows_)
            throw DimensionMismatchError("matrix-vector size mismatch");
        std::vector<T> y(cols_, T(0));
        for_each_nonzero([&](std::size_t i, std::size_t j, long long v) {
            y[j] += T(v) * x[i];
        });
        return y;
    }

    std::vector<std::vector<long long>> to_rows() const;
    long long max_abs() const;

    /// Entrywise equality, independent of storage.
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Storage storage_ = Storage::Dense;
    std::vector<long long> dense_;  // row-major, Dense only
    // CSR, Sparse only
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<long long> values_;
};

}  // namespace helm
