#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/groupoid.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace arsys {

/// Canonical twist-equivalence data of a braiding: the diagonal values and
/// the symmetrized products of the upper triangle.
struct TwistClass {
    std::size_t rank = 0;
    std::vector<GroupValue> diagonal;
    std::vector<GroupValue> products; // (i,j) for i < j, row-major

    bool operator==(const TwistClass& other) const
    {
        return rank == other.rank && diagonal == other.diagonal &&
               products == other.products;
    }
    bool operator<(const TwistClass& other) const;
};

TwistClass twist_class(const BraidingMatrix& q);

/// Raised when an orbit is requested for a braiding whose groupoid did not
/// come out finite; carries the enumeration verdict.
class NotFiniteError : public std::runtime_error {
public:
    NotFiniteError(OutcomeKind kind, std::size_t visited);
    OutcomeKind kind() const noexcept { return kind_; }

private:
    OutcomeKind kind_;
};

/**
 * All twist classes of the braiding transported to the groupoid's bases,
 * in every index ordering. Throws NotFiniteError when the closure is not
 * finite within the cap.
 */
std::set<TwistClass> weyl_orbit(const BraidingMatrix& q, std::size_t cap = kDefaultCap);

/// True iff the twist class of a lies in the orbit of b.
bool weyl_equivalent(const BraidingMatrix& a, const BraidingMatrix& b,
                     std::size_t cap = kDefaultCap);

} // namespace arsys
