#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "chd/rng.hpp"

using chd::RngStream;

TEST_CASE("same seed and tag reproduce the draw sequence") {
    auto a = RngStream::derive(42, "split");
    auto b = RngStream::derive(42, "split");
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct tags give distinct sequences") {
    auto a = RngStream::derive(42, "split");
    auto b = RngStream::derive(42, "oversample");
    bool any_diff = false;
    for (int i = 0; i < 10; ++i) any_diff |= (a.next_u64() != b.next_u64());
    CHECK(any_diff);
}

TEST_CASE("distinct seeds give distinct sequences") {
    auto a = RngStream::derive(1, "a");
    auto b = RngStream::derive(2, "a");
    bool any_diff = false;
    for (int i = 0; i < 10; ++i) any_diff |= (a.next_u64() != b.next_u64());
    CHECK(any_diff);
}

TEST_CASE("empty tag is rejected") {
    CHECK_THROWS(RngStream::derive(1, ""));
}

TEST_CASE("next_double lies in [0,1)") {
    auto rng = RngStream::derive(7, "doubles");
    for (int i = 0; i < 1000; ++i) {
        double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("next_index stays in range and hits every bucket") {
    auto rng = RngStream::derive(7, "index");
    std::set<std::size_t> seen;
    for (int i = 0; i < 1000; ++i) {
        std::size_t v = rng.next_index(5);
        CHECK(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("permutation is a bijection") {
    auto rng = RngStream::derive(9, "perm");
    auto perm = rng.permutation(100);
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < 100; ++i) CHECK(perm[i] == i);
}

TEST_CASE("child streams derived from the same parent state agree") {
    auto parent1 = RngStream::derive(3, "x");
    auto parent2 = RngStream::derive(3, "x");
    auto c1 = parent1.child("left");
    auto c2 = parent2.child("left");
    CHECK(c1.next_u64() == c2.next_u64());
}
