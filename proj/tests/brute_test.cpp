#include <doctest.h>

#include "multisieve/brute.hpp"
#include "multisieve/sieve.hpp"
#include "test_util.hpp"

using namespace multisieve;
namespace tu = multisieve::testutil;

namespace {

ExplicitSet zero_sum_set(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> t(k, 0);
    while (true) {
        unsigned s = 0;
        for (unsigned v : t) s += v;
        if (s % n == 0) tuples.push_back(t);
        unsigned i = k;
        while (i > 0 && t[i - 1] + 1 == n) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
    }
    return ExplicitSet::over_indices(n, k, std::move(tuples), false);
}

} // namespace

TEST_CASE("enumerate_restricted_multisets") {
    auto pairs = ExplicitSet::make({"a", "b"}, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, false);
    auto reps = enumerate_restricted_multisets(pairs);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == std::vector<unsigned>{0, 0});
    CHECK(reps[1] == std::vector<unsigned>{0, 1});
    CHECK(reps[2] == std::vector<unsigned>{1, 1});

    CHECK(enumerate_restricted_multisets(ExplicitSet::over_indices(2, 2, {}, false)).empty());

    // regression fixture: the zero-sum triples mod 3 collapse to exactly
    // these four multisets
    auto z33 = enumerate_restricted_multisets(zero_sum_set(3, 3));
    std::vector<std::vector<unsigned>> expected{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
    CHECK(z33 == expected);
}

TEST_CASE("brute counts") {
    std::vector<std::string> d3{"0", "1", "2"};
    auto cube = ExplicitSet::full(d3, 3);
    CHECK(brute_count_bounded(cube, 1) == 1);
    CHECK(brute_count_multisets(cube) == 10);

    // d = 1 on zero-sum pairs mod 4: solutions of 2x = 0 are {0, 2}
    CHECK(brute_count_distinct(zero_sum_set(4, 2), 1) == 2);

    SymmetricFunction<Rat> one{[](const std::vector<unsigned>&) { return Rat(1); }};
    CHECK(brute_weighted_bounded(cube, one, 2) == Rat(brute_count_bounded(cube, 2)));
    CHECK(brute_weighted_distinct(cube, one, 2) == Rat(brute_count_distinct(cube, 2)));
}

TEST_CASE("brute enumeration ceiling") {
    ExplicitSet wide = ExplicitSet::over_indices(25, 6, {}, false);
    CHECK_THROWS_AS(enumerate_restricted_multisets(wide), validation_error);
}

TEST_CASE("inclusion_exclusion_distinct") {
    // k = 2: |X| - |X_12|
    auto pairs = ExplicitSet::full({"a", "b", "c"}, 2);
    auto r2 = inclusion_exclusion_distinct(pairs);
    CHECK(r2.terms == 2);
    CHECK(r2.value == 9 - 3);

    auto cube = ExplicitSet::full({"a", "b", "c"}, 3);
    auto r3 = inclusion_exclusion_distinct(cube);
    CHECK(r3.terms == 8);
    CHECK(r3.value == 6);

    auto z53 = zero_sum_set(5, 3);
    auto rz = inclusion_exclusion_distinct(z53);
    CHECK(rz.value == count_distinct_tuples(SymmetricSetSpec::from_explicit(z53)));
    CHECK(rz.value == Int(factorial(3)) * count_multisets_distinct(
                          SymmetricSetSpec::from_explicit(z53), 3));

    CHECK_THROWS_WITH_AS(inclusion_exclusion_distinct(ExplicitSet::over_indices(2, 6, {}, false)),
                         doctest::Contains("2^C(k,2)"), validation_error);
}

TEST_CASE("inclusion-exclusion equals the sieve on random sets") {
    std::mt19937_64 rng(31337);
    for (const auto& X : tu::generate_orbit_union_sets(10, 4, 5, rng)) {
        auto ie = inclusion_exclusion_distinct(X);
        CHECK(ie.terms == (1ull << (X.k() * (X.k() - 1) / 2)));
        CHECK(ie.value == count_distinct_tuples(SymmetricSetSpec::from_explicit(X)));
    }
}
