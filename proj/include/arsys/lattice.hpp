#pragma once

#include "arsys/values.hpp"

#include <cstddef>
#include <vector>

namespace arsys {

/// A degree vector in Z^n, coordinates relative to the standard basis.
using IntVector = std::vector<Int>;

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Int>>;

IntVector vec_add(const IntVector& a, const IntVector& b);
IntVector vec_scaled_add(const IntVector& a, Int k, const IntVector& b); // a + k*b
IntVector vec_neg(const IntVector& a);

IntMatrix identity_matrix(std::size_t n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
bool mat_is_identity(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(IntMatrix a);

/// Inverse of a matrix with determinant +-1; integer entries by unimodularity.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Rank over Q, computed fraction-free.
std::size_t matrix_rank(IntMatrix a);

/**
 * An ordered Z-basis of Z^n: n integer vectors whose column matrix has
 * determinant +-1. Vectors are expressed in the coordinates of the
 * standard basis.
 */
class OrderedBasis {
public:
    explicit OrderedBasis(std::vector<IntVector> vectors);

    static OrderedBasis standard(std::size_t n);

    std::size_t rank() const noexcept { return vectors_.size(); }
    const std::vector<IntVector>& vectors() const noexcept { return vectors_; }
    const IntVector& operator[](std::size_t i) const { return vectors_.at(i); }

    /// Column matrix: column j holds the j-th basis vector.
    IntMatrix column_matrix() const;

    /// Flattened coordinates, usable as a deterministic set key.
    std::vector<Int> key() const;

    /// The same vectors in swapped order (rank 2 only).
    OrderedBasis transposed() const;

    bool operator==(const OrderedBasis& other) const { return vectors_ == other.vectors_; }
    bool operator!=(const OrderedBasis& other) const { return !(*this == other); }
    bool operator<(const OrderedBasis& other) const { return vectors_ < other.vectors_; }

private:
    std::vector<IntVector> vectors_;
};

} // namespace arsys
