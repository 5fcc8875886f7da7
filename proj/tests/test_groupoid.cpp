#include "arsys/groupoid.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace arsys;
using arsys::test::fv;
using arsys::test::mixed_rank2;

namespace {

BraidingMatrix generic_a2()
{
    return BraidingMatrix::rank2(fv({1}), fv({0}), fv({-1}), fv({1}));
}

BraidingMatrix generic_b2()
{
    return BraidingMatrix::rank2(fv({1}), fv({0}), fv({-2}), fv({2}));
}

std::set<IntVector> positive_of(const GenerationOutcome& outcome)
{
    return std::get<FiniteOutcome>(outcome).root_system.positive();
}

} // namespace

TEST_CASE("reflect at the origin")
{
    BraidingMatrix q = generic_a2();
    OrderedBasis e0 = OrderedBasis::standard(2);

    auto r = reflect(q, e0, 0);
    REQUIRE(r.has_value());
    CHECK(r->cartan_row[1] == 1);
    CHECK(r->image == OrderedBasis({{-1, 0}, {1, 1}}));

    SUBCASE("reflecting twice returns the basis")
    {
        auto rr = reflect(q, r->image, 0);
        REQUIRE(rr.has_value());
        CHECK(rr->image == e0);
        CHECK(rr->map == r->map); // s_{i, s_i(E)} = s_{i,E}
    }
    SUBCASE("the map is an involutive pseudo-reflection")
    {
        CHECK(mat_is_identity(mat_mul(r->map.matrix, r->map.matrix)));
        IntMatrix diff = r->map.matrix;
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i][i] -= 1;
        CHECK(matrix_rank(diff) == 1);
    }
}

TEST_CASE("reflect undefined when the diagonal is one")
{
    BraidingMatrix q = BraidingMatrix::rank2(fv({0}), fv({0}), fv({1}), fv({0}));
    std::size_t bad = 99;
    CHECK(!reflect(q, OrderedBasis::standard(2), 0, &bad).has_value());
    CHECK(bad == 1);
}

TEST_CASE("generate on the classical patterns")
{
    SUBCASE("two disconnected vertices")
    {
        BraidingMatrix q(2, {fv({1, 0}), fv({0, 0}), fv({0, 0}), fv({0, 1})});
        auto outcome = generate(q, OrderedBasis::standard(2));
        REQUIRE(kind_of(outcome) == OutcomeKind::Finite);
        CHECK(positive_of(outcome) == std::set<IntVector>{{1, 0}, {0, 1}});
    }
    SUBCASE("three positive roots")
    {
        auto outcome = generate(generic_a2(), OrderedBasis::standard(2));
        REQUIRE(kind_of(outcome) == OutcomeKind::Finite);
        CHECK(positive_of(outcome) == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
    }
    SUBCASE("four positive roots")
    {
        auto outcome = generate(generic_b2(), OrderedBasis::standard(2));
        REQUIRE(kind_of(outcome) == OutcomeKind::Finite);
        CHECK(positive_of(outcome) ==
              std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
    }
    SUBCASE("six positive roots")
    {
        BraidingMatrix q = BraidingMatrix::rank2(fv({1}), fv({0}), fv({-3}), fv({3}));
        auto outcome = generate(q, OrderedBasis::standard(2));
        REQUIRE(kind_of(outcome) == OutcomeKind::Finite);
        CHECK(positive_of(outcome) ==
              std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    }
}

TEST_CASE("generate detects missing cartan data")
{
    BraidingMatrix q = BraidingMatrix::rank2(fv({0}), fv({0}), fv({1}), fv({0}));
    auto outcome = generate(q, OrderedBasis::standard(2));
    REQUIRE(kind_of(outcome) == OutcomeKind::NotArithmetic);
    const auto& na = std::get<NotArithmetic>(outcome);
    CHECK(na.witness == OrderedBasis::standard(2));
    CHECK(na.pivot == 0);
}

TEST_CASE("generate caps out on affine data")
{
    BraidingMatrix q = BraidingMatrix::rank2(fv({1}), fv({0}), fv({-2}), fv({1}));
    auto outcome = generate(q, OrderedBasis::standard(2), 50);
    CHECK(kind_of(outcome) == OutcomeKind::CapExceeded);
}

TEST_CASE("generate is deterministic")
{
    BraidingMatrix q = generic_b2();
    auto a = generate(q, OrderedBasis::standard(2));
    auto b = generate(q, OrderedBasis::standard(2));
    const auto& ga = std::get<FiniteOutcome>(a).groupoid;
    const auto& gb = std::get<FiniteOutcome>(b).groupoid;
    REQUIRE(ga.nodes().size() == gb.nodes().size());
    for (std::size_t i = 0; i < ga.nodes().size(); ++i)
        CHECK(ga.nodes()[i] == gb.nodes()[i]);
}

TEST_CASE("positive split")
{
    SUBCASE("three-root pattern")
    {
        auto outcome = generate(generic_a2(), OrderedBasis::standard(2));
        auto [pos, neg] = positive_split(std::get<FiniteOutcome>(outcome).root_system);
        CHECK(pos == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
        CHECK(neg == std::set<IntVector>{{-1, 0}, {0, -1}, {-1, -1}});
    }
    SUBCASE("rank one")
    {
        BraidingMatrix q(1, {fv({1})});
        auto outcome = generate(q, OrderedBasis::standard(1));
        auto [pos, neg] = positive_split(std::get<FiniteOutcome>(outcome).root_system);
        CHECK(pos == std::set<IntVector>{{1}});
        CHECK(neg == std::set<IntVector>{{-1}});
    }
    SUBCASE("halves always balance")
    {
        auto outcome = generate(generic_b2(), OrderedBasis::standard(2));
        const auto& system = std::get<FiniteOutcome>(outcome).root_system;
        auto [pos, neg] = positive_split(system);
        CHECK(system.roots().size() == 2 * pos.size());
        CHECK(neg.size() == pos.size());
    }
}

TEST_CASE("mixed-sign roots are rejected")
{
    BraidingMatrix q = generic_a2();
    CHECK_THROWS_AS(
        ArithmeticRootSystem(q, OrderedBasis::standard(2), {{1, -1}, {1, 0}}),
        std::logic_error);
}

TEST_CASE("no proportional positive roots in finite outcomes")
{
    auto outcome = generate(BraidingMatrix::rank2(fv({1}), fv({0}), fv({-3}), fv({3})),
                            OrderedBasis::standard(2));
    const auto& pos = std::get<FiniteOutcome>(outcome).root_system.positive();
    for (const auto& a : pos)
        for (const auto& b : pos) {
            if (a == b)
                continue;
            // rank 2: proportional iff the cross product vanishes
            CHECK(a[0] * b[1] - a[1] * b[0] != 0);
        }
}
