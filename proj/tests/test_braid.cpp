#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "braidrep/braid.hpp"
#include "generators.hpp"

using namespace braidrep;

namespace {

// Rewrites w by one braid-group relation at a random position, if possible:
// far commutation, the braid relation (either sign), or inserting g,-g.
BraidWord random_rewrite(std::mt19937_64& rng, const BraidWord& w) {
    std::vector<int> l = w.letters();
    const int n = w.strands();
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::size_t> pos(0, l.empty() ? 0 : l.size() - 1);
    const std::size_t p = pos(rng);
    switch (kind(rng)) {
        case 0:
            if (p + 1 < l.size() && std::abs(std::abs(l[p]) - std::abs(l[p + 1])) >= 2)
                std::swap(l[p], l[p + 1]);
            break;
        case 1:
            if (p + 2 < l.size() && l[p] == l[p + 2] && (l[p] > 0) == (l[p + 1] > 0) &&
                std::abs(std::abs(l[p]) - std::abs(l[p + 1])) == 1) {
                std::swap(l[p], l[p + 1]);
                l[p + 2] = l[p];
            }
            break;
        default: {
            std::uniform_int_distribution<int> gen(1, n - 1);
            int g = gen(rng);
            l.insert(l.begin() + static_cast<long>(std::min(p, l.size())), {g, -g});
        }
    }
    return BraidWord(n, l);
}

// Cancels the rightmost cancellable pair first, one at a time.
BraidWord reduce_from_right(BraidWord w) {
    for (;;) {
        auto l = w.letters();
        bool changed = false;
        for (std::size_t k = l.size(); k-- > 1;) {
            if (l[k] == -l[k - 1]) {
                l.erase(l.begin() + static_cast<long>(k - 1), l.begin() + static_cast<long>(k + 1));
                changed = true;
                break;
            }
        }
        if (!changed) return w;
        w = BraidWord(w.strands(), l);
    }
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_word("1 -2 1", 3).letters() == std::vector<int>{1, -2, 1});
    CHECK(free_reduce(parse_word("1 -1", 2)).empty());
    CHECK(parse_word("  ", 3).empty());
    CHECK_THROWS_AS(parse_word("3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1 x", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1.5", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("-3", 3), std::invalid_argument);
    CHECK(to_string(parse_word("1  -2 1", 3)) == "1 -2 1");
}

TEST_CASE("permutation image") {
    CHECK(permutation_image(BraidWord(3)) == std::vector<int>{1, 2, 3});
    CHECK(permutation_image(BraidWord(3, {1, 2, 1})) == std::vector<int>{3, 2, 1});
    CHECK(permutation_image(BraidWord(3, {1, -1, 2})) == std::vector<int>{1, 3, 2});
}

TEST_CASE("exponent sum") {
    CHECK(exponent_sum(BraidWord(4, {1, -2, 3, 3})) == 2);
    CHECK(exponent_sum(BraidWord(4)) == 0);
    CHECK(exponent_sum(BraidWord(2, {-1, -1})) == -2);
}

TEST_CASE("nontriviality filter") {
    CHECK_FALSE(certified_nontrivial(parse_word("1 -1", 2)));
    CHECK(certified_nontrivial(parse_word("1", 2)));
    CHECK(certified_nontrivial(parse_word("1 1", 2)));                // exponent sum
    CHECK(certified_nontrivial(parse_word("1 -2", 3)));               // permutation
    CHECK_FALSE(certified_nontrivial(parse_word("1 1 -2 -2", 3)));    // pure, sum 0
}

TEST_CASE("random words") {
    CHECK(random_word(3, 0, 123).empty());
    const BraidWord a = random_word(4, 8, 42);
    CHECK(a == random_word(4, 8, 42));
    CHECK(a.size() <= 8);
    CHECK(free_reduce(a) == a);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BraidWord w = random_word(2, 3, seed);
        for (int g : w.letters()) CHECK(std::abs(g) == 1);
    }
    CHECK_THROWS_AS(random_word(3, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_word(1, 2, 0), std::invalid_argument);

    // All 2(n-1) letters show up.
    std::vector<int> seen(7, 0);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const BraidWord w = random_word(4, 1, seed);
        for (int g : w.letters()) ++seen[static_cast<std::size_t>(g + 3)];
    }
    for (int g : {-3, -2, -1, 1, 2, 3}) CHECK(seen[static_cast<std::size_t>(g + 3)] > 0);
}

TEST_CASE("property: free reduction is confluent") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const BraidWord w = testing::random_raw_word(rng, 3, 14);
        CHECK(free_reduce(w) == reduce_from_right(w));
        CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    }
}

TEST_CASE("property: S_n image and exponent sum are braid invariants") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        BraidWord w = testing::random_raw_word(rng, n, 10);
        const auto perm = permutation_image(w);
        const int sum = exponent_sum(w);
        CHECK(permutation_image(free_reduce(w)) == perm);
        for (int step = 0; step < 20; ++step) {
            w = random_rewrite(rng, w);
            CHECK(permutation_image(w) == perm);
            CHECK(exponent_sum(w) == sum);
        }
    }
}
