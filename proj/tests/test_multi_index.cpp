#include <doctest.h>

#include <random>

#include "cuntz/multi_index.hpp"
#include "support/oracle.hpp"

using namespace cuntz;

TEST_CASE("multi-index value") {
    CHECK(MultiIndex(2, {0, 1}).value() == 2);
    CHECK(MultiIndex(3, {0, 2, 1}).value() == 15); // 0 + 2*3 + 1*9
    CHECK(MultiIndex::empty(2).value() == 0);
    CHECK(MultiIndex::empty(7).value() == 0);
    CHECK(MultiIndex(2, {1, 1}).value() == 3);
    CHECK(MultiIndex(2, {0, 1}).stride() == 4);
}

TEST_CASE("digit validation") {
    CHECK_THROWS_AS(MultiIndex(2, {0, 2}), InputError);
    CHECK_THROWS_AS(MultiIndex(1, {}), InputError);
}

TEST_CASE("dual index") {
    CHECK(MultiIndex(2, {0}).dual() == MultiIndex(2, {1}));
    CHECK(MultiIndex(3, {0, 2, 1}).dual() == MultiIndex(3, {2, 0, 1}));
    CHECK(MultiIndex::empty(2).dual() == MultiIndex::empty(2));
}

TEST_CASE("dual is an involution and complements the value") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        const int N = trial % 2 == 0 ? 2 : 3;
        const MultiIndex i = oracle::random_multi_index(rng, N, 6);
        CHECK(i.dual().dual() == i);
        CHECK(i.dual().value() == i.stride() - 1 - i.value());
    }
}

TEST_CASE("prefix relation") {
    const MultiIndex e = MultiIndex::empty(2);
    const MultiIndex a(2, {1});
    const MultiIndex ab(2, {1, 0});
    CHECK(is_prefix(e, a));
    CHECK(is_prefix(a, a));
    CHECK(is_prefix(a, ab));
    CHECK_FALSE(is_prefix(ab, a));
    CHECK_FALSE(is_prefix(MultiIndex(2, {0}), ab));
    CHECK(suffix_after(a, ab) == MultiIndex(2, {0}));
    CHECK(concat(a, MultiIndex(2, {0})) == ab);
}

TEST_CASE("concatenation value matches positional arithmetic") {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 200; ++trial) {
        const int N = trial % 2 == 0 ? 2 : 3;
        const MultiIndex a = oracle::random_multi_index(rng, N, 4);
        const MultiIndex b = oracle::random_multi_index(rng, N, 4);
        const MultiIndex c = concat(a, b);
        CHECK(c.value() == a.value() + b.value() * a.stride());
        CHECK(c.stride() == a.stride() * b.stride());
    }
}
