#include "arsys/equivalence.hpp"

#include "arsys/classification.hpp"
#include "arsys/rank2.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace arsys;
using arsys::test::fv;
using arsys::test::torsion_rank2;

namespace {

BraidingMatrix generic_a2()
{
    return BraidingMatrix::rank2(fv({1}), fv({0}), fv({-1}), fv({1}));
}

} // namespace

TEST_CASE("orbit of the three-root pattern is a single twist class")
{
    auto orbit = weyl_orbit(generic_a2());
    CHECK(orbit.size() == 1);
    CHECK(orbit.count(twist_class(generic_a2())) == 1);
}

TEST_CASE("orbit of the twelfth-root class contains all three variants")
{
    // (zeta^4, 1, zeta^-3, -zeta^2) at N = 12
    BraidingMatrix v1 = torsion_rank2(12, 4, 0, 9, 8);
    BraidingMatrix v2 = torsion_rank2(12, 4, 0, 11, 6); // (zeta^4, zeta^-1, -1)
    BraidingMatrix v3 = torsion_rank2(12, 9, 0, 1, 6);  // (zeta^-3, zeta, -1)
    auto orbit = weyl_orbit(v1);
    CHECK(orbit.count(twist_class(v2)) == 1);
    CHECK(orbit.count(twist_class(v3)) == 1);
    CHECK(weyl_equivalent(v2, v1));
    CHECK(weyl_equivalent(v3, v1));
}

TEST_CASE("orbit singleton for the order-two diagonal")
{
    BraidingMatrix q = torsion_rank2(2, 1, 0, 0, 1);
    CHECK(weyl_orbit(q).size() == 1);
}

TEST_CASE("equivalence sanity")
{
    SUBCASE("reflexive")
    {
        CHECK(weyl_equivalent(generic_a2(), generic_a2()));
    }
    SUBCASE("distinct rows at a shared parameter are inequivalent")
    {
        // row 2 at a cube root vs row 7, both over N = 6
        BraidingMatrix a = torsion_rank2(6, 2, 0, 4, 2);
        BraidingMatrix b = torsion_rank2(6, 2, 0, 5, 3);
        CHECK(!weyl_equivalent(a, b));
        CHECK(!weyl_equivalent(b, a));
    }
    SUBCASE("non-finite inputs are rejected with the verdict")
    {
        BraidingMatrix q = BraidingMatrix::rank2(fv({1}), fv({0}), fv({-2}), fv({1}));
        CHECK_THROWS_AS(weyl_orbit(q), NotFiniteError);
        try {
            weyl_orbit(q);
        } catch (const NotFiniteError& e) {
            CHECK(e.kind() == OutcomeKind::CertifiedInfinite);
        }
    }
}

TEST_CASE("twist-equivalent inputs have identical orbits")
{
    BraidingMatrix q = generic_a2();
    BraidingMatrix twisted = BraidingMatrix::rank2(q.at(0, 0), q.at(0, 1) * fv({2}),
                                                   q.at(1, 0) * fv({-2}), q.at(1, 1));
    CHECK(weyl_orbit(q) == weyl_orbit(twisted));
}

TEST_CASE("equivalence relation laws on the table instances")
{
    // group the standard instances by row; members share one ambient group
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
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                bool fwd = weyl_equivalent(members[i], members[j]);
                bool bwd = weyl_equivalent(members[j], members[i]);
                CHECK(fwd);
                CHECK(fwd == bwd); // symmetry
            }
        // transitivity along the listed chain of variants
        for (std::size_t i = 2; i < members.size(); ++i) {
            bool ab = weyl_equivalent(members[i - 2], members[i - 1]);
            bool bc = weyl_equivalent(members[i - 1], members[i]);
            bool ac = weyl_equivalent(members[i - 2], members[i]);
            CHECK((!ab || !bc || ac));
        }
    }
}

TEST_CASE("diagonal value multiset is preserved across an orbit")
{
    BraidingMatrix v1 = torsion_rank2(12, 4, 0, 9, 8);
    BraidingMatrix v2 = torsion_rank2(12, 4, 0, 11, 6);
    REQUIRE(weyl_equivalent(v1, v2));

    auto diag_multiset = [](const BraidingMatrix& q) {
        auto outcome = decide(q);
        const auto& pos = std::get<FiniteOutcome>(outcome).root_system.positive();
        std::multiset<GroupValue> values;
        for (const auto& d : pos)
            values.insert(chi(q, d, d));
        return values;
    };
    CHECK(diag_multiset(v1) == diag_multiset(v2));
}
