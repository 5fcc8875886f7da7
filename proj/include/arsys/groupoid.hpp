#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/lattice.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace arsys {

/// A pseudo-reflection of Z^n in standard coordinates: an involution T
/// with rank(T - id) = 1, remembered together with its pivot index.
struct ReflectionMap {
    IntMatrix matrix;
    std::size_t pivot = 0;

    bool operator==(const ReflectionMap& other) const
    {
        return pivot == other.pivot && matrix == other.matrix;
    }
};

struct Reflection {
    ReflectionMap map;
    OrderedBasis image;
    std::vector<Int> cartan_row; // m_ij for j != i, entry j (m_ii slot holds 0)
};

/**
 * Reflect the basis at the given pivot. Returns std::nullopt when some
 * required Cartan integer does not exist; if undefined_j is non-null it
 * receives the first offending column index.
 */
std::optional<Reflection> reflect(const BraidingMatrix& q, const OrderedBasis& basis,
                                  std::size_t pivot, std::size_t* undefined_j = nullptr);

struct GroupoidEdge {
    std::size_t from = 0;
    std::size_t pivot = 0;
    std::size_t to = 0;
};

/**
 * The closure of the origin basis under all defined reflections, with the
 * braiding it belongs to. Nodes are stored in discovery (BFS) order, which
 * is deterministic for a given input.
 */
class WeylGroupoid {
public:
    WeylGroupoid(BraidingMatrix braiding, std::vector<OrderedBasis> nodes,
                 std::vector<GroupoidEdge> edges, std::size_t origin_index);

    const BraidingMatrix& braiding() const noexcept { return braiding_; }
    const std::vector<OrderedBasis>& nodes() const noexcept { return nodes_; }
    const std::vector<GroupoidEdge>& edges() const noexcept { return edges_; }
    const OrderedBasis& origin() const { return nodes_.at(origin_); }
    std::size_t origin_index() const noexcept { return origin_; }

private:
    BraidingMatrix braiding_;
    std::vector<OrderedBasis> nodes_;
    std::vector<GroupoidEdge> edges_;
    std::size_t origin_;
};

/**
 * The root data of a finite groupoid: all basis vectors over all nodes,
 * deduplicated, split into the nonnegative and nonpositive cones of the
 * origin coordinates. A root with mixed signs violates the defining
 * properties and raises std::logic_error.
 */
class ArithmeticRootSystem {
public:
    ArithmeticRootSystem(BraidingMatrix braiding, OrderedBasis base,
                         std::set<IntVector> roots);

    const std::set<IntVector>& roots() const noexcept { return roots_; }
    const std::set<IntVector>& positive() const noexcept { return positive_; }
    const BraidingMatrix& braiding() const noexcept { return braiding_; }
    const OrderedBasis& base() const noexcept { return base_; }

private:
    BraidingMatrix braiding_;
    OrderedBasis base_;
    std::set<IntVector> roots_;
    std::set<IntVector> positive_;
};

struct FiniteOutcome {
    WeylGroupoid groupoid;
    ArithmeticRootSystem root_system;
};

/// A reachable basis where a required Cartan integer does not exist.
struct NotArithmetic {
    OrderedBasis witness;
    std::size_t pivot = 0;
    std::size_t other = 0;
};

/// Rank-2 only: the reflection chain can provably never return to its
/// starting basis. The witness is the repeating tail of Cartan integers,
/// whose step-matrix product is an SL(2,Z) element of infinite order (or,
/// when via_semigroup is set, decomposes into generators of an
/// identity-free subsemigroup). The product itself is copied out only when
/// it fits 64-bit entries; the tail always reproduces it.
struct CertifiedInfinite {
    std::vector<Int> window_cartan;                // m along one tail period
    Int window_begin = 0;
    std::array<Int, 4> period_product{1, 0, 0, 1}; // row-major 2x2
    bool product_representable = true;
    bool via_semigroup = false;
};

/// Enumeration stopped at the node cap with no certificate either way.
struct CapExceeded {
    std::size_t visited = 0;
};

using GenerationOutcome =
    std::variant<FiniteOutcome, NotArithmetic, CertifiedInfinite, CapExceeded>;

enum class OutcomeKind { Finite, NotArithmetic, CertifiedInfinite, CapExceeded };

OutcomeKind kind_of(const GenerationOutcome& outcome);
const char* to_string(OutcomeKind kind);

inline constexpr std::size_t kDefaultCap = 100000;

/**
 * Breadth-first closure of the origin under all reflections. Finite when
 * the closure completes within the cap with every Cartan integer defined;
 * NotArithmetic on the first undefined one; CapExceeded otherwise (this
 * function never certifies infiniteness by itself).
 */
GenerationOutcome generate(const BraidingMatrix& q, const OrderedBasis& origin,
                           std::size_t cap = kDefaultCap);

/// Union of all basis vectors of a finite groupoid, with the positive cone.
ArithmeticRootSystem roots_of(const WeylGroupoid& groupoid);

/// Exact split into positive and negative roots; verifies the partition.
std::pair<std::set<IntVector>, std::set<IntVector>>
positive_split(const ArithmeticRootSystem& system);

} // namespace arsys
