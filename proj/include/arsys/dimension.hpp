#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/groupoid.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace arsys {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Height of the restricted PBW generator of the given degree: the order of
 * chi(d,d) when that order lies in [2, infinity); std::nullopt (unbounded)
 * when the order is 1 or infinite.
 */
std::optional<Int> pbw_height(const BraidingMatrix& q, const IntVector& degree);

struct DimensionFactor {
    IntVector root;
    Int height = 0;
};

/**
 * Dimension verdict for the positive part: the product of the heights over
 * all positive roots when every height is finite (factors kept for audit),
 * otherwise the first root of unbounded height. The product aggregation is
 * a derived convention; the per-root heights are the primitive data.
 */
struct DimensionVerdict {
    bool finite = false;
    BigInt value = 0;                     // valid when finite
    std::vector<DimensionFactor> factors; // valid when finite
    IntVector witness;                    // valid when not finite
};

DimensionVerdict nichols_dimension(const BraidingMatrix& q,
                                   const ArithmeticRootSystem& system);

} // namespace arsys
