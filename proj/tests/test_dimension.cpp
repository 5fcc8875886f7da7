#include "arsys/dimension.hpp"

#include "arsys/classification.hpp"
#include "arsys/rank2.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace arsys;
using arsys::test::fv;
using arsys::test::mixed_rank2;
using arsys::test::torsion_rank2;

namespace {

const ArithmeticRootSystem& roots_for(const BraidingMatrix& q,
                                      GenerationOutcome& storage)
{
    storage = decide(q);
    REQUIRE(kind_of(storage) == OutcomeKind::Finite);
    return std::get<FiniteOutcome>(storage).root_system;
}

/// Exterior-algebra count: two anticommuting generators square to zero,
/// so the monomials 1, x1, x2, x1 x2 are a basis.
constexpr int kTwoAnticommutingGenerators = 4;

} // namespace

TEST_CASE("heights on the named degrees")
{
    BraidingMatrix q = torsion_rank2(2, 1, 0, 0, 1); // (-1, 1, 1, -1)
    CHECK(pbw_height(q, {1, 0}) == 2);

    BraidingMatrix a2 = BraidingMatrix::rank2(fv({1}), fv({0}), fv({-1}), fv({1}));
    CHECK(!pbw_height(a2, {1, 1}).has_value()); // chi(d,d) = q, infinite order

    BraidingMatrix triv = torsion_rank2(1, 0, 0, 0, 0);
    CHECK(!pbw_height(triv, {1, 0}).has_value()); // order 1 excluded
}

TEST_CASE("dimension of the sign braiding")
{
    BraidingMatrix q = torsion_rank2(2, 1, 0, 0, 1);
    GenerationOutcome storage = CapExceeded{};
    auto verdict = nichols_dimension(q, roots_for(q, storage));
    REQUIRE(verdict.finite);
    CHECK(verdict.value == kTwoAnticommutingGenerators);
    CHECK(verdict.factors.size() == 2);
}

TEST_CASE("dimension at a cube root")
{
    // (q, 1, q^-1, q) at q in R3 over N = 3
    BraidingMatrix q = torsion_rank2(3, 1, 0, 2, 1);
    GenerationOutcome storage = CapExceeded{};
    auto verdict = nichols_dimension(q, roots_for(q, storage));
    REQUIRE(verdict.finite);
    // three positive roots, each of height 3
    CHECK(verdict.value == 27);
    for (const auto& f : verdict.factors)
        CHECK(f.height == 3);
}

TEST_CASE("unbounded generator detected")
{
    BraidingMatrix q = mixed_rank2(2, {0, 1}, {0, 0}, {1, 0}, {0, 1});
    GenerationOutcome storage = CapExceeded{};
    auto verdict = nichols_dimension(q, roots_for(q, storage));
    CHECK(!verdict.finite);
    CHECK(verdict.witness == IntVector{1, 1});
}

TEST_CASE("dimension agrees across the variants of a table row")
{
    std::map<int, std::vector<BraidingMatrix>> rows;
    for (const RowInstance& inst : standard_instances()) {
        auto& bucket = rows[inst.row];
        if (!bucket.empty() && (bucket.front().modulus() != inst.matrix.modulus() ||
                                bucket.front().free_rank() != inst.matrix.free_rank()))
            continue;
        bucket.push_back(inst.matrix);
    }
    for (const auto& [row, members] : rows) {
        CAPTURE(row);
        std::optional<std::pair<bool, BigInt>> expected;
        for (const BraidingMatrix& q : members) {
            GenerationOutcome storage = CapExceeded{};
            auto verdict = nichols_dimension(q, roots_for(q, storage));
            std::pair<bool, BigInt> got{verdict.finite,
                                        verdict.finite ? verdict.value : BigInt(0)};
            if (!expected)
                expected = got;
            CHECK(*expected == got);
        }
    }
}

TEST_CASE("dimension is twist invariant")
{
    BraidingMatrix q = torsion_rank2(3, 1, 0, 2, 1);
    BraidingMatrix twisted = BraidingMatrix::rank2(q.at(0, 0), q.at(0, 1) * GroupValue::root(1, 3),
                                                   q.at(1, 0) * GroupValue::root(2, 3),
                                                   q.at(1, 1));
    GenerationOutcome s1 = CapExceeded{}, s2 = CapExceeded{};
    auto v1 = nichols_dimension(q, roots_for(q, s1));
    auto v2 = nichols_dimension(twisted, roots_for(twisted, s2));
    REQUIRE(v1.finite);
    REQUIRE(v2.finite);
    CHECK(v1.value == v2.value);
}
