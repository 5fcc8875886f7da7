#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/values.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace arsys::test {

/// Value with free exponents only, N = 1.
inline GroupValue fv(std::vector<Int> free)
{
    return GroupValue(std::move(free), 0, 1);
}

inline GroupValue one(std::size_t free_rank, Int modulus)
{
    return GroupValue::one(free_rank, modulus);
}

/// Rank-2 braiding over a pure torsion group: entries are powers of z.
inline BraidingMatrix torsion_rank2(Int modulus, Int t11, Int t12, Int t21, Int t22)
{
    return BraidingMatrix::rank2(GroupValue::root(t11, modulus),
                                 GroupValue::root(t12, modulus),
                                 GroupValue::root(t21, modulus),
                                 GroupValue::root(t22, modulus));
}

/// Rank-2 braiding over Z x Z/N: entries q^f * z^t.
inline BraidingMatrix mixed_rank2(Int modulus, std::pair<Int, Int> e11,
                                  std::pair<Int, Int> e12, std::pair<Int, Int> e21,
                                  std::pair<Int, Int> e22)
{
    auto v = [modulus](std::pair<Int, Int> e) {
        return GroupValue({e.first}, e.second, modulus);
    };
    return BraidingMatrix::rank2(v(e11), v(e12), v(e21), v(e22));
}

/// Deterministic random rank-2 matrices for the property suites:
/// torsion order <= 24, free rank <= 2, exponents bounded by 6.
class RandomBraidings {
public:
    explicit RandomBraidings(std::uint64_t seed) : rng_(seed) {}

    BraidingMatrix next()
    {
        Int modulus = std::uniform_int_distribution<Int>(1, 24)(rng_);
        std::size_t free_rank = std::uniform_int_distribution<int>(0, 2)(rng_);
        std::vector<GroupValue> entries;
        for (int k = 0; k < 4; ++k) {
            std::vector<Int> free(free_rank);
            for (auto& e : free)
                e = std::uniform_int_distribution<Int>(-6, 6)(rng_);
            Int tors = std::uniform_int_distribution<Int>(0, modulus - 1)(rng_);
            entries.emplace_back(std::move(free), tors, modulus);
        }
        return BraidingMatrix(2, std::move(entries));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace arsys::test
