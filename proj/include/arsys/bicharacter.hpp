#pragma once

#include "arsys/lattice.hpp"
#include "arsys/values.hpp"

#include <optional>
#include <vector>

namespace arsys {

/**
 * The structure constants (q_ij) of a diagonal braiding: an n x n matrix of
 * group values, all living in one ambient group Z^F x Z/N. Entry (i,j) is
 * the value of the bicharacter on the standard basis pair (eps_i, eps_j).
 */
class BraidingMatrix {
public:
    BraidingMatrix(std::size_t rank, std::vector<GroupValue> entries);

    static BraidingMatrix rank2(GroupValue q11, GroupValue q12,
                                GroupValue q21, GroupValue q22);

    std::size_t rank() const noexcept { return rank_; }
    const GroupValue& at(std::size_t i, std::size_t j) const;

    std::size_t free_rank() const noexcept { return entries_.front().free_rank(); }
    Int modulus() const noexcept { return entries_.front().modulus(); }
    GroupValue one() const { return GroupValue::one(free_rank(), modulus()); }

    bool operator==(const BraidingMatrix& other) const;
    bool operator!=(const BraidingMatrix& other) const { return !(*this == other); }

private:
    std::size_t rank_;
    std::vector<GroupValue> entries_; // row-major
};

/// Bicharacter evaluation: prod_{i,j} q_ij^(d_i * e_j).
GroupValue chi(const BraidingMatrix& q, const IntVector& d, const IntVector& e);

namespace detail {

/// Smallest m >= 0 with base^m == target, solved exactly: the free parts
/// either pin m or reduce to a single linear congruence mod N.
std::optional<Int> min_power_solving(const GroupValue& base, const GroupValue& target);

/// The generalized Cartan integer from a diagonal value and the symmetrized
/// off-diagonal product: minimum over the two defining conditions.
std::optional<Int> cartan_from_values(const GroupValue& diag, const GroupValue& sym);

} // namespace detail

/**
 * Generalized Cartan integer m_ij at the basis E: the least m >= 0 with
 * either chi(e_i,e_i)^m chi(e_i,e_j) chi(e_j,e_i) = 1, or
 * chi(e_i,e_i)^{m+1} = 1 with chi(e_i,e_i) != 1. std::nullopt when no m
 * exists; that outcome is exact, not a search timeout.
 */
std::optional<Int> cartan_entry(const BraidingMatrix& q, const OrderedBasis& basis,
                                std::size_t i, std::size_t j);

/// Structure constants transported to another basis: entry (i,j) = chi(e_i, e_j).
BraidingMatrix matrix_at_basis(const BraidingMatrix& q, const OrderedBasis& basis);

/// Equal diagonals and equal symmetrized products q_ij q_ji.
bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b);

} // namespace arsys
