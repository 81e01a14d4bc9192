#include <doctest.h>

#include "schubvan/generic.hpp"
#include "schubvan/polynomial.hpp"

using namespace schubvan;

TEST_CASE("sample_kappa shape") {
    Rng rng(3);
    const auto a4 = build(LieType::A, 4);
    const IntMatrix ka = sample_kappa(a4, rng, 91);
    int free_entries = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (j <= i) CHECK(ka(i, j) == 0);
            else if (ka(i, j) >= 1 && ka(i, j) <= 91) ++free_entries;
        }
    CHECK(free_entries == 6);

    const auto b3 = build(LieType::B, 3);
    const IntMatrix kb = sample_kappa(b3, rng, 406);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            const BigInt& v = kb(i - 1, j - 1);
            if (j <= i || i + j == 8) {
                CHECK(v == 0);
            } else if (b3.position_index({i, j}) >= 0) {
                CHECK(v >= 1);
                CHECK(v <= 406);
            } else {
                CHECK(v == -kb(7 - j, 7 - i));
            }
        }
    const IntMatrix d = antidiagonal(7);
    CHECK((kb.transpose() * d + d * kb).is_zero());
}

TEST_CASE("p = 1 forces all parameters to 1") {
    Rng rng(5);
    const auto d4 = build(LieType::D, 4);
    for (const auto& a : sample_alpha(d4, rng, 1)) CHECK(a == 1);
}

TEST_CASE("zero kappa gives the identity") {
    for (LieType t : {LieType::A, LieType::B, LieType::D}) {
        const auto data = build(t, 3);
        const auto u = to_group(IntMatrix(data.m, data.m), data);
        CHECK(u.K == IntMatrix::identity(data.m));
        CHECK(u.K_inv == IntMatrix::identity(data.m));
    }
}

TEST_CASE("symbolic inverse in SL4") {
    const auto a4 = build(LieType::A, 4);
    std::vector<Polynomial> alpha;
    for (int i = 0; i < 6; ++i) alpha.push_back(Polynomial::variable(i));
    const auto u = to_group(kappa_from_alpha(a4, alpha), a4);
    const auto a = [](int i) { return Polynomial::variable(i); };
    CHECK(u.K_inv(0, 0) == Polynomial(1));
    CHECK(u.K_inv(0, 1) == -a(0));
    CHECK(u.K_inv(0, 2) == a(0) * a(3) - a(1));
    CHECK(u.K_inv(0, 3) == -a(2) + a(1) * a(5) + a(0) * (a(4) - a(3) * a(5)));
    CHECK(u.K_inv(1, 3) == a(3) * a(5) - a(4));
}

TEST_CASE("unipotent invariants") {
    Rng rng(17);
    for (LieType t : {LieType::A, LieType::B, LieType::D})
        for (int n = 2; n <= 5; ++n) {
            const auto data = build(t, n);
            const IntMatrix d = antidiagonal(data.m);
            const IntMatrix id = IntMatrix::identity(data.m);
            for (int trial = 0; trial < 20; ++trial) {
                const auto u = to_group(sample_kappa(data, rng, 50), data);
                CHECK(u.K.is_unitriangular());
                CHECK(u.K_inv.is_unitriangular());
                CHECK(u.K * u.K_inv == id);
                CHECK(det_exact(u.K) == 1);
                if (t != LieType::A) {
                    CHECK(u.K.transpose() * d * u.K == d);
                    CHECK((u.kappa.transpose() * d + d * u.kappa).is_zero());
                }
            }
        }
}

TEST_CASE("draw_uniform range") {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const long v = draw_uniform(rng, 7);
        CHECK(v >= 1);
        CHECK(v <= 7);
    }
    CHECK_THROWS(draw_uniform(rng, 0));
}
