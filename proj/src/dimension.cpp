#include "arsys/dimension.hpp"

namespace arsys {

std::optional<Int> pbw_height(const BraidingMatrix& q, const IntVector& degree)
{
    auto order = chi(q, degree, degree).finite_order();
    if (!order || *order < 2)
        return std::nullopt;
    return order;
}

DimensionVerdict nichols_dimension(const BraidingMatrix& q,
                                   const ArithmeticRootSystem& system)
{
    DimensionVerdict verdict;
    verdict.finite = true;
    verdict.value = 1;
    for (const IntVector& root : system.positive()) {
        auto h = pbw_height(q, root);
        if (!h) {
            verdict = DimensionVerdict{};
            verdict.witness = root;
            return verdict;
        }
        verdict.factors.push_back(DimensionFactor{root, *h});
        verdict.value *= *h;
    }
    return verdict;
}

} // namespace arsys
