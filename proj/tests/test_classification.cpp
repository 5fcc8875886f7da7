#include "arsys/classification.hpp"

#include "arsys/rank2.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace arsys;
using arsys::test::fv;
using arsys::test::torsion_rank2;

TEST_CASE("table shape")
{
    const auto& table = classification_table();
    REQUIRE(table.size() == 16);
    std::size_t variants = 0;
    for (const auto& row : table)
        variants += row.variants.size();
    CHECK(variants == 33);
}

TEST_CASE("classify the named examples")
{
    SUBCASE("cube root with sign pattern")
    {
        // (zeta, 1, -zeta, -1) over N = 6: zeta = z^2
        auto match = classify_rank2(torsion_rank2(6, 2, 0, 5, 3));
        REQUIRE(match.has_value());
        CHECK(match->row == 7);
    }
    SUBCASE("twelfth root data")
    {
        // (zeta^4, 1, zeta^-3, -zeta^2) over N = 12
        auto match = classify_rank2(torsion_rank2(12, 4, 0, 9, 8));
        REQUIRE(match.has_value());
        CHECK(match->row == 8);
        CHECK(match->variant == 1);
    }
    SUBCASE("affine data does not match")
    {
        BraidingMatrix q = BraidingMatrix::rank2(fv({1}), fv({0}), fv({-2}), fv({1}));
        CHECK(!classify_rank2(q).has_value());
    }
}

TEST_CASE("classify the standard instances back to their rows")
{
    for (const RowInstance& inst : standard_instances()) {
        CAPTURE(inst.row);
        CAPTURE(inst.variant);
        CAPTURE(inst.label);
        auto match = classify_rank2(inst.matrix);
        REQUIRE(match.has_value());
        CHECK(match->row == inst.row);
    }
}

TEST_CASE("matching is transposition-aware")
{
    // row 2 data with the basis order flipped still matches row 2
    BraidingMatrix q = BraidingMatrix::rank2(fv({1}), fv({-1}), fv({0}), fv({1}));
    auto match = classify_rank2(q);
    REQUIRE(match.has_value());
    CHECK(match->row == 2);
}

TEST_CASE("ties resolve to the lowest row")
{
    // (i, 1, -1, -1) satisfies both row 4 (q = i) and row 5; row 4 wins.
    BraidingMatrix q = torsion_rank2(4, 1, 0, 2, 2);
    auto match = classify_rank2(q);
    REQUIRE(match.has_value());
    CHECK(match->row == 4);
}

TEST_CASE("generic diagonal one only matches the disconnected row")
{
    BraidingMatrix all_one = torsion_rank2(1, 0, 0, 0, 0);
    auto match = classify_rank2(all_one);
    REQUIRE(match.has_value());
    CHECK(match->row == 1);

    BraidingMatrix bad = BraidingMatrix::rank2(fv({0}), fv({0}), fv({1}), fv({0}));
    CHECK(!classify_rank2(bad).has_value());
}

TEST_CASE("instances cover every variant and stated parameter set")
{
    auto instances = standard_instances();
    // 33 variants; extra instances for the alternate parameter choices:
    // rows 5, 6 (x2 generic), row 8 (3 variants x2), row 14 (orders 5 and 20,
    // the order-20 case with two parameter choices).
    std::size_t row14 = 0, row8 = 0;
    for (const auto& inst : instances) {
        if (inst.row == 14)
            ++row14;
        if (inst.row == 8)
            ++row8;
    }
    CHECK(row8 == 6);
    CHECK(row14 == 6); // 2 variants x (R5 once + R20 twice)
    CHECK(instances.size() >= 33);
}
