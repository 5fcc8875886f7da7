#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/groupoid.hpp"

#include <span>
#include <vector>

namespace arsys {

/// 2x2 integer matrix, row-major.
struct Mat2Z {
    Int a = 1, b = 0, c = 0, d = 1;

    static Mat2Z identity() { return {1, 0, 0, 1}; }
    static Mat2Z swap() { return {0, 1, 1, 0}; }

    Int det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
    Int trace() const { return checked_add(a, d); }

    Mat2Z operator*(const Mat2Z& o) const
    {
        return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
                checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
                checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
                checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
    }

    /// Inverse for determinant +-1 matrices.
    Mat2Z inverse() const;

    bool operator==(const Mat2Z& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2Z& o) const { return !(*this == o); }

    std::array<Int, 4> to_array() const { return {a, b, c, d}; }
};

/**
 * Whether a determinant +-1 integer matrix has finite multiplicative order:
 * +-id, determinant 1 with trace in {-1,0,1}, or determinant -1 with trace 0.
 * Throws std::domain_error when the determinant is not +-1.
 */
bool sl2_has_finite_order(const Mat2Z& m);

/**
 * Positivity certificate: true when every generator has the shape
 * [[a,-b],[c,-d]] with 0 < d < bound*b < a and determinant 1. The
 * subsemigroup generated by such matrices keeps that shape and therefore
 * never contains the identity.
 */
bool semigroup_excludes_identity(std::span<const Mat2Z> generators, Int bound);

enum class ChainStart { Origin, Transposed };

/**
 * One step of the rank-2 reflection chain: the structure constants at the
 * current basis (diagonal values and the symmetrized product), the Cartan
 * integer m, the branch value p driving the recursion, and the cumulative
 * product of per-step matrices relative to the chain's starting basis.
 */
struct ChainState {
    Int step = 0;
    Int m = 0;
    GroupValue p;
    GroupValue q11;
    GroupValue q12q21;
    GroupValue q22;
    Mat2Z cumulative;
};

struct ChainResult {
    enum class Kind { Periodic, UndefinedAt, NotPeriodicWithinCap };
    Kind kind = Kind::NotPeriodicWithinCap;
    Int period = 0;         // valid for Periodic
    Int undefined_step = 0; // valid for UndefinedAt
    std::vector<ChainState> states;
    ChainStart start = ChainStart::Origin;
};

/**
 * Iterates basis -> (swap of the pivot-1 reflection image), tracking the
 * reflected structure constants by the closed recursion and cross-checking
 * them against direct evaluation at the current basis every step. Halts at
 * the first repeated basis matrix (Periodic, reporting one full period of
 * states), at an undefined Cartan integer, or at the step cap.
 */
ChainResult reflection_chain(const BraidingMatrix& q, ChainStart start,
                             std::size_t cap = kDefaultCap);

/// The ordered basis a chain state corresponds to.
OrderedBasis chain_basis(ChainStart start, const Mat2Z& cumulative);

/**
 * Necessary condition for rank-2 finiteness, evaluated purely
 * multiplicatively. Every braiding with a finite groupoid passes; failing
 * it certifies that the groupoid is not finite-arithmetic.
 */
bool necessary_condition(const BraidingMatrix& q);

/**
 * Finiteness decision. For rank 2 this runs both reflection chains first:
 * an undefined Cartan integer maps to NotArithmetic, a repeating tail of
 * constants whose period product has infinite order (or decomposes into
 * identity-free semigroup generators) upgrades an inconclusive enumeration
 * to CertifiedInfinite, and periodic chains fall through to the
 * breadth-first closure. Other ranks delegate to generate() directly.
 */
GenerationOutcome decide(const BraidingMatrix& q, std::size_t cap = kDefaultCap);

} // namespace arsys
