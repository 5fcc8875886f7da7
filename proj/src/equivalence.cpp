#include "arsys/equivalence.hpp"

#include "arsys/rank2.hpp"

#include <algorithm>
#include <numeric>

namespace arsys {

bool TwistClass::operator<(const TwistClass& other) const
{
    if (rank != other.rank)
        return rank < other.rank;
    if (diagonal != other.diagonal)
        return std::lexicographical_compare(diagonal.begin(), diagonal.end(),
                                            other.diagonal.begin(), other.diagonal.end());
    return std::lexicographical_compare(products.begin(), products.end(),
                                        other.products.begin(), other.products.end());
}

TwistClass twist_class(const BraidingMatrix& q)
{
    TwistClass t;
    t.rank = q.rank();
    for (std::size_t i = 0; i < q.rank(); ++i)
        t.diagonal.push_back(q.at(i, i));
    for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = i + 1; j < q.rank(); ++j)
            t.products.push_back(q.at(i, j) * q.at(j, i));
    return t;
}

NotFiniteError::NotFiniteError(OutcomeKind kind, std::size_t visited)
    : std::runtime_error(std::string("weyl_orbit: groupoid not finite (") +
                         to_string(kind) + ", visited " + std::to_string(visited) + ")"),
      kind_(kind)
{
}

std::set<TwistClass> weyl_orbit(const BraidingMatrix& q, std::size_t cap)
{
    GenerationOutcome outcome = decide(q, cap);
    const auto* finite = std::get_if<FiniteOutcome>(&outcome);
    if (!finite) {
        std::size_t visited = 0;
        if (const auto* capped = std::get_if<CapExceeded>(&outcome))
            visited = capped->visited;
        throw NotFiniteError(kind_of(outcome), visited);
    }

    std::size_t n = q.rank();
    std::vector<std::size_t> perm(n);
    std::set<TwistClass> orbit;
    for (const OrderedBasis& node : finite->groupoid.nodes()) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<IntVector> vectors;
            vectors.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                vectors.push_back(node[perm[i]]);
            orbit.insert(twist_class(matrix_at_basis(q, OrderedBasis(std::move(vectors)))));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return orbit;
}

bool weyl_equivalent(const BraidingMatrix& a, const BraidingMatrix& b, std::size_t cap)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("weyl_equivalent: rank mismatch");
    return weyl_orbit(b, cap).count(twist_class(a)) > 0;
}

} // namespace arsys
