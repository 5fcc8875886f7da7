#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace arsys {

using Int = std::int64_t;

/// Overflow-checked 64-bit helpers. All exact computations in this library
/// go through these; running out of range raises instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// Normalize x into [0, n). Requires n >= 1.
Int mod_norm(Int x, Int n);

/// Smallest x >= 0 with a*x = b (mod n), if any. Requires n >= 1.
std::optional<Int> solve_linear_congruence(Int a, Int b, Int n);

/**
 * An element of the abelian group Z^F x Z/N written multiplicatively:
 * the free part collects exponents of F formal parameters q_1..q_F, the
 * torsion part is the exponent of a fixed primitive N-th root of unity.
 *
 * The pair (F, N) identifies the ambient group; combining values from
 * different groups is a structural error.
 */
class GroupValue {
public:
    GroupValue(std::vector<Int> free_exponents, Int torsion, Int modulus);

    static GroupValue one(std::size_t free_rank, Int modulus);
    /// The unique element of order two. Throws std::domain_error when the
    /// torsion order is odd (no such element exists).
    static GroupValue minus_one(std::size_t free_rank, Int modulus);
    /// zeta^exponent with trivial free part.
    static GroupValue root(Int exponent, Int modulus, std::size_t free_rank = 0);
    /// The free generator q_index.
    static GroupValue generator(std::size_t index, std::size_t free_rank, Int modulus);

    const std::vector<Int>& free() const noexcept { return free_; }
    Int tors() const noexcept { return tors_; }
    Int modulus() const noexcept { return modulus_; }
    std::size_t free_rank() const noexcept { return free_.size(); }

    bool is_one() const noexcept;
    bool has_free_part() const noexcept;

    GroupValue operator*(const GroupValue& other) const;
    GroupValue inverse() const;
    GroupValue pow(Int k) const;

    /// Multiplicative order; std::nullopt when infinite (nonzero free part).
    std::optional<Int> finite_order() const;

    /// True iff the multiplicative order equals n exactly.
    bool is_primitive_root(Int n) const;

    bool operator==(const GroupValue& other) const;
    bool operator!=(const GroupValue& other) const { return !(*this == other); }
    /// Lexicographic on (free, tors); total order within one group.
    bool operator<(const GroupValue& other) const;

private:
    void require_same_group(const GroupValue& other) const;

    std::vector<Int> free_;
    Int tors_;    // in [0, modulus_)
    Int modulus_; // N >= 1
};

} // namespace arsys
