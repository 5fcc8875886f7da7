#pragma once

#include "arsys/bicharacter.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arsys {

/**
 * One entry of a row pattern: either unconstrained, or a signed monomial
 * (-1)^neg * param^exp in one of the row's parameters (param -1 encodes a
 * constant +-1).
 */
struct EntryPattern {
    bool any = false;
    bool neg = false;
    int param = -1; // -1 constant, 0 primary, 1 secondary
    Int exp = 0;
};

/// Constraint pattern for (q11, q21, q22); q12 is always 1 in the table.
struct VariantPattern {
    std::array<EntryPattern, 3> entries;
    std::string_view tree; // opaque label
};

struct ParamDomain {
    enum class Kind { None, Generic, Root };
    Kind kind = Kind::None;
    /// Root: the admissible primitive orders. Generic: excluded orders.
    std::vector<Int> orders;
};

/// Alternate parameter choice listed with a row: value' =
/// (-1)^neg * other_param^other_exp * value^self_exp.
struct Substitution {
    int target = 0; // which parameter it rewrites
    bool neg = false;
    Int other_exp = 0;
    Int self_exp = 1;
};

struct ClassificationRow {
    int id = 0;
    std::vector<VariantPattern> variants;
    ParamDomain primary;
    ParamDomain secondary;
    std::vector<Substitution> substitutions;
};

/// The rank-2 classification table (16 rows).
const std::vector<ClassificationRow>& classification_table();

struct RowMatch {
    int row = 0;
    int variant = 0; // 1-based
    bool transposed = false;
    std::string_view tree;
};

/**
 * Match a rank-2 braiding against the classification table: the twist class
 * (diagonal plus symmetrized product) is tested against every row pattern,
 * in both index orderings, over all admissible parameter values in the
 * braiding's ambient group. Ties resolve to the lowest row id.
 */
std::optional<RowMatch> classify_rank2(const BraidingMatrix& q);

/// A concrete braiding built from one row pattern at stated parameters.
struct RowInstance {
    int row = 0;
    int variant = 0; // 1-based
    std::string label;
    BraidingMatrix matrix;
};

/**
 * Every row and variant instantiated over its canonical ambient group:
 * generic rows with formal free parameters, fixed rows with a primitive
 * root of the stated order, plus all alternate parameter choices.
 */
std::vector<RowInstance> standard_instances();

} // namespace arsys
