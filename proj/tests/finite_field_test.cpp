#include <doctest.h>

#include <algorithm>

#include "multisieve/applications.hpp"
#include "multisieve/finite_field.hpp"

using namespace multisieve;

namespace {

std::vector<FieldSpec> fields_up_to(unsigned qmax) {
    std::vector<FieldSpec> out;
    for (unsigned p = 2; p <= qmax; ++p) {
        if (!is_prime(p)) continue;
        unsigned long q = p;
        for (unsigned a = 1; q <= qmax; ++a, q *= p) out.push_back(FieldSpec::make(p, a));
    }
    return out;
}

} // namespace

TEST_CASE("field construction") {
    auto f2 = FieldSpec::make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<unsigned>{0, 1});

    // the only irreducible monic quadratic over F_2
    auto f4 = FieldSpec::make(2, 2);
    CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});

    // regression: smallest irreducible monic quadratic over F_3 is t^2 + 1
    auto f9 = FieldSpec::make(3, 2);
    CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});

    CHECK_THROWS_AS(FieldSpec::make(4, 1), validation_error);
    CHECK_THROWS_AS(FieldSpec::make(1, 1), validation_error);
    CHECK_THROWS_AS(FieldSpec::make(101, 2), validation_error);
    CHECK_THROWS_AS(FieldSpec::make(2, 0), validation_error);
}

TEST_CASE("element enumeration and rendering") {
    auto f9 = FieldSpec::make(3, 2);
    auto elems = f9.enumerate_elements();
    REQUIRE(elems.size() == 9);
    for (unsigned i = 0; i < 9; ++i) CHECK(f9.index_of(elems[i]) == i);
    CHECK(f9.render(elems[5]) == "2,1"); // 5 = 2 + 1*3

    CHECK(f9.parse("2,1") == elems[5]);
    CHECK(f9.parse("2") == elems[2]); // short form pads high degrees with zero
    CHECK_THROWS_AS(f9.parse("3,0"), validation_error);
    CHECK_THROWS_AS(f9.parse("1,1,1"), validation_error);
    CHECK_THROWS_AS(f9.parse("x"), validation_error);
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
    for (const auto& F : fields_up_to(49)) {
        auto elems = F.enumerate_elements();
        const FqElement zero = F.zero();
        const FqElement one = F.one();
        for (const auto& x : elems) {
            CHECK(F.add(x, zero) == x);
            CHECK(F.mul(x, one) == x);
            CHECK(F.is_zero(F.add(x, F.neg(x))));
            if (!F.is_zero(x)) CHECK(F.mul(x, F.inv(x)) == one);
        }
        // commutativity + associativity + distributivity; cube loop only
        // for small q, pairs otherwise
        if (F.q() <= 9) {
            for (const auto& x : elems)
                for (const auto& y : elems) {
                    CHECK(F.add(x, y) == F.add(y, x));
                    CHECK(F.mul(x, y) == F.mul(y, x));
                    for (const auto& z : elems) {
                        CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
                        CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                    }
                }
        } else {
            for (size_t i = 0; i < elems.size(); ++i)
                for (size_t j = i; j < elems.size(); ++j) {
                    const auto& x = elems[i];
                    const auto& y = elems[j];
                    CHECK(F.add(x, y) == F.add(y, x));
                    CHECK(F.mul(x, y) == F.mul(y, x));
                    const auto& z = elems[(i * 31 + j * 17) % elems.size()];
                    CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
                    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                }
        }
    }
}

TEST_CASE("inverses and scalar action") {
    auto f9 = FieldSpec::make(3, 2);
    for (const auto& x : f9.enumerate_elements()) {
        if (f9.is_zero(x)) {
            CHECK_THROWS_AS(f9.inv(x), validation_error);
            continue;
        }
        CHECK(f9.mul(x, f9.inv(x)) == f9.one());
    }
    for (const auto& x : f9.enumerate_elements()) {
        CHECK(f9.is_zero(f9.int_scale(3, x)));   // characteristic p
        CHECK(f9.int_scale(1, x) == x);
        CHECK(f9.int_scale(-1, x) == f9.neg(x));
        CHECK(f9.int_scale(7, x) == f9.int_scale(7 % 3, x));
    }
}

TEST_CASE("Frobenius in F_8 and F_9") {
    for (auto [p, a] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
        auto F = FieldSpec::make(p, a);
        auto elems = F.enumerate_elements();
        auto pow_p = [&](FqElement x) {
            FqElement r = F.one();
            for (unsigned i = 0; i < p; ++i) r = F.mul(r, x);
            return r;
        };
        for (const auto& x : elems)
            for (const auto& y : elems)
                CHECK(pow_p(F.add(x, y)) == F.add(pow_p(x), pow_p(y)));
    }
}

TEST_CASE("linear equation solution counts") {
    // count of solutions of l_1 x_1 + ... + l_m x_m = b is q^{m-1} unless
    // every coefficient vanishes in F_q, where it is (v(b)+1) q^{m-1}
    for (auto [p, a] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u},
                        {3u, 2u}}) {
        auto F = FieldSpec::make(p, a);
        auto elems = F.enumerate_elements();
        // coefficient values covering both vanishing and non-vanishing cases
        std::vector<unsigned> values{1, p - 1, p, 2 * p};
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (unsigned m = 1; m <= 3; ++m) {
            std::vector<unsigned> sel(m, 0);
            while (true) {
                bool all_vanish = true;
                for (unsigned s : sel)
                    if (values[s] % p != 0) all_vanish = false;
                for (const auto& b : elems) {
                    // brute count over q^m assignments
                    Int solutions = 0;
                    std::vector<unsigned> idx(m, 0);
                    while (true) {
                        FqElement sum = F.zero();
                        for (unsigned i = 0; i < m; ++i)
                            sum = F.add(sum, F.int_scale(static_cast<long>(values[sel[i]]),
                                                         elems[idx[i]]));
                        if (sum == b) ++solutions;
                        unsigned i = m;
                        while (i > 0 && idx[i - 1] + 1 == F.q()) idx[--i] = 0;
                        if (i == 0) break;
                        ++idx[i - 1];
                    }
                    Int expected = int_pow(Int(F.q()), m - 1);
                    if (all_vanish) expected *= v_of(F, b) + 1;
                    CHECK(solutions == expected);
                }
                unsigned i = m;
                while (i > 0 && sel[i - 1] + 1 == values.size()) sel[--i] = 0;
                if (i == 0) break;
                ++sel[i - 1];
            }
        }
    }
}
