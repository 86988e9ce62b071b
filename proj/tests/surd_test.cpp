#include "creepers/surd.hpp"

#include <stdexcept>
#include <vector>

#include "creepers/families.hpp"
#include "doctest.h"
#include "oracles.hpp"

using creepers::expand;
using creepers::Expansion;
using creepers::Int;
using creepers::Radicand;
using creepers::seed;
using creepers::SeedMode;
using creepers::step;
using creepers::SurdState;

TEST_CASE("seed conventions") {
    SUBCASE("D = 5, order: the golden-ratio order") {
        auto [rad, st] = seed(5, SeedMode::order);
        CHECK(rad.n == 5);
        CHECK(rad.source_d == 5);
        CHECK(st.p == 1);
        CHECK(st.q == 2);
    }
    SUBCASE("D = 0 mod 4 halves the radicand") {
        auto [rad, st] = seed(8, SeedMode::order);
        CHECK(rad.n == 2);
        CHECK(rad.isqrt_n == 1);
        CHECK(rad.source_d == 8);
        CHECK(st.p == 0);
        CHECK(st.q == 1);
    }
    SUBCASE("raw mode") {
        auto [rad, st] = seed(5, SeedMode::raw);
        CHECK(rad.n == 5);
        CHECK(st.p == 0);
        CHECK(st.q == 1);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(seed(16, SeedMode::order), std::domain_error);  // D/4 = 4 square
        CHECK_THROWS_AS(seed(9, SeedMode::order), std::domain_error);   // square D
        CHECK_THROWS_AS(seed(9, SeedMode::raw), std::domain_error);
        CHECK_THROWS_AS(seed(7, SeedMode::order), std::domain_error);   // 3 mod 4
        CHECK_THROWS_AS(seed(6, SeedMode::order), std::domain_error);   // 2 mod 4
        CHECK_THROWS_AS(seed(0, SeedMode::raw), std::domain_error);
        CHECK_THROWS_AS(seed(Int(-5), SeedMode::order), std::domain_error);
    }
}

TEST_CASE("step on sqrt(2)") {
    auto [rad, st] = seed(2, SeedMode::raw);
    auto [a0, s1] = step(st, rad);
    CHECK(a0 == 1);
    CHECK(s1.p == 1);
    CHECK(s1.q == 1);
    CHECK(s1.h == 1);
    auto [a1, s2] = step(s1, rad);
    CHECK(a1 == 2);
    CHECK(s2.p == 1);
    CHECK(s2.q == 1);
}

TEST_CASE("step with a negative Q state") {
    // (1 + sqrt(13))/(-3) ~ -1.54: a = -2, next state (5, 4)
    Radicand rad{13, 3, 13};
    SurdState st{1, -3, 0};
    auto [a, nx] = step(st, rad);
    CHECK(a == -2);
    CHECK(nx.p == 5);
    CHECK(nx.q == 4);
}

TEST_CASE("step computes the exact floor on random admissible states") {
    // sign of sqrt(N) - t for nonsquare N
    auto cmp_sqrt = [](const Int& n, const Int& t) {
        if (sgn(t) < 0) {
            return 1;
        }
        return sgn(Int(n - t * t)) > 0 ? 1 : -1;
    };
    unsigned long s = 0x9e3779b97f4a7c15ull;
    auto rnd = [&s] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    int negatives = 0;
    for (int iter = 0; iter < 4000; ++iter) {
        Int p = Int(static_cast<long>(rnd() % 2001) - 1000);
        Int q = Int(static_cast<long>(rnd() % 401) - 200);
        if (q == 0) {
            continue;
        }
        // shift a draft radicand so that Q | N - P^2
        Int n = Int(static_cast<unsigned long>(rnd() % 100000 + 2));
        n += ((p * p - n) % q + q) % q;
        while (n <= 0) {
            n += abs(q);
        }
        if (creepers::is_perfect_square(n)) {
            continue;
        }
        if (sgn(q) < 0) {
            ++negatives;
        }
        Radicand rad{n, creepers::isqrt(n), n};
        auto [a, nx] = step(SurdState{p, q, 0}, rad);
        // a <= (P + sqrt(N))/Q < a + 1, checked by exact comparisons
        if (sgn(q) > 0) {
            CHECK(cmp_sqrt(n, a * q - p) == 1);
            CHECK(cmp_sqrt(n, (a + 1) * q - p) == -1);
        } else {
            CHECK(cmp_sqrt(n, a * q - p) == -1);
            CHECK(cmp_sqrt(n, (a + 1) * q - p) == 1);
        }
        CHECK(q * nx.q + nx.p * nx.p == n);
        CHECK((n - nx.p * nx.p) % nx.q == 0);
    }
    CHECK(negatives > 500);
}

TEST_CASE("step errors") {
    Radicand rad{13, 3, 13};
    CHECK_THROWS_AS(step(SurdState{1, 0, 0}, rad), std::invalid_argument);
    // 5 does not divide 13 - 1
    CHECK_THROWS_AS(step(SurdState{1, 5, 0}, rad), std::invalid_argument);
}

TEST_CASE("expand sqrt(2): period 1, closing quotient 2a0") {
    Expansion e = expand(2, SeedMode::raw);
    REQUIRE(e.period.has_value());
    CHECK(*e.period == 1);
    CHECK_FALSE(e.truncated);
    REQUIRE(e.records.size() == 2);
    CHECK(e.records[0].a == 1);
    CHECK(e.records[1].a == 2);
    CHECK(e.records[1].p == 1);
    CHECK(e.records[1].q == 1);
    CHECK(e.sigma() == 1);
}

TEST_CASE("expand D=5 order: period 1") {
    Expansion e = expand(5, SeedMode::order);
    REQUIRE(e.period.has_value());
    CHECK(*e.period == 1);
    CHECK(e.records[0].a == 1);
    CHECK(e.records[1].a == 1);  // 2a0 - 1
    CHECK(e.sigma() == 2);
}

TEST_CASE("easy-kreeper n=6 expansion matches the table skeleton") {
    Int d = creepers::discriminant(creepers::find_family("easy-kreeper-67"), 6);
    Expansion e = expand(d, SeedMode::order);
    REQUIRE(e.period.has_value());
    CHECK(*e.period == 46);
    CHECK(e.records.size() == 47);
    CHECK(e.records[0].a == Int("633208675188"));
    CHECK(e.records[46].a == Int("1266417350376"));
    CHECK(e.records[46].a == 2 * e.records[0].a);

    SUBCASE("rows 3 -> 4 recurrence") {
        const auto& r3 = e.records[3];
        const auto& r4 = e.records[4];
        CHECK(r3.a == 3);
        CHECK(r3.p == Int("452291910879"));
        CHECK(r3.q == Int("361833528619"));
        CHECK(r4.p == r3.a * r3.q - r3.p);
        CHECK(r4.p == Int("633208674978"));
        CHECK(r4.q == 737);
    }
}

TEST_CASE("negative-l n=6: sigma 2, display coordinates halve the table") {
    Int d = creepers::discriminant(creepers::find_family("negl-131"), 6);
    REQUIRE(d % 4 == 1);
    Expansion e = expand(d, SeedMode::order);
    REQUIRE(e.period.has_value());
    CHECK(*e.period == 56);
    CHECK(e.sigma() == 2);
    CHECK(e.records[0].a == Int("194575656054823"));
    CHECK(e.records[56].a == Int("389151312109645"));
    CHECK(e.records[56].a == 2 * e.records[0].a - 1);

    // machine state (P,Q) = (1,2) prints as (0,1)
    auto d0 = display_row(e, e.records[0]);
    CHECK(d0.p == 0);
    CHECK(d0.q == 1);
    auto d1 = display_row(e, e.records[1]);
    CHECK(d1.p == Int("194575656054822"));
    CHECK(d1.q == Int("353773920099703"));
    auto d2 = display_row(e, e.records[2]);
    CHECK(d2.a == 10);
    CHECK(d2.p == Int("159198264044880"));
    CHECK(d2.q == Int("35377392009943"));
}

TEST_CASE("lkreeper n=11: period 70") {
    Int d = creepers::discriminant(creepers::find_family("lkreeper-43"), 11);
    Expansion e = expand(d, SeedMode::order);
    REQUIRE(e.period.has_value());
    CHECK(*e.period == 70);
    CHECK(e.records[0].a == Int("4646468697356133413"));
    CHECK(e.records[1].q == Int("4646468697355994276"));
    CHECK(e.records[70].a == 2 * e.records[0].a);
    CHECK(e.records[35].q == 5);
    CHECK(e.records[34].q == 7 * creepers::pow_int(43, 11));
    CHECK(e.records[36].q == 7 * creepers::pow_int(43, 11));
    // derived: the typo row h=67 really is 5 * 43^8
    CHECK(e.records[67].q == 5 * creepers::pow_int(43, 8));
}

TEST_CASE("truncation reproduces the ml-2 prefix without closure") {
    Int d = creepers::discriminant(creepers::find_family("ml-2"), 26);
    Expansion e = expand(d, SeedMode::order, 53);
    CHECK(e.truncated);
    CHECK_FALSE(e.period.has_value());
    CHECK(e.records.size() == 53);
    CHECK_THROWS_AS(creepers::detect_symmetry(e), std::domain_error);
}

TEST_CASE("oracle equivalence on small radicands") {
    for (Int n = 2; n < 300; ++n) {
        if (creepers::is_perfect_square(n)) {
            continue;
        }
        Expansion e = expand(n, SeedMode::raw);
        REQUIRE(e.period.has_value());
        auto oracle = oracles::naive_cf_raw(n, 1000000);
        REQUIRE(oracle.periodic);
        CHECK(oracle.period == *e.period);
        REQUIRE(oracle.rows.size() == e.records.size());
        for (std::size_t i = 0; i < oracle.rows.size(); ++i) {
            CHECK(oracle.rows[i].a == e.records[i].a);
            CHECK(oracle.rows[i].p == e.records[i].p);
            CHECK(oracle.rows[i].q == e.records[i].q);
        }
    }
}

TEST_CASE("step invariant and reduced-state bounds inside the period") {
    const std::vector<Int> radicands{Int(2), Int(19), Int(1901),
                                     Int(creepers::pow_int(10, 12) + 3)};
    for (const Int& n : radicands) {
        Expansion e = expand(n, SeedMode::raw);
        REQUIRE(e.period.has_value());
        for (std::size_t h = 0; h + 1 < e.records.size(); ++h) {
            CHECK(e.records[h].q * e.records[h + 1].q + e.records[h + 1].p * e.records[h + 1].p ==
                  e.radicand.n);
        }
        for (std::size_t h = 1; h <= *e.period; ++h) {
            CHECK(e.records[h].p > 0);
            CHECK(e.records[h].p < e.radicand.isqrt_n + 1);
            CHECK(e.records[h].q > 0);
            CHECK(e.records[h].q <= 2 * e.radicand.isqrt_n + 1);
        }
    }
}

TEST_CASE("symmetry of periodic expansions") {
    SUBCASE("easy-kreeper n=6 mirrors about h = 23") {
        Int d = creepers::discriminant(creepers::find_family("easy-kreeper-67"), 6);
        Expansion e = expand(d, SeedMode::order);
        auto rep = creepers::detect_symmetry(e);
        CHECK(rep.palindrome);
        CHECK(rep.q_mirror);
        CHECK(rep.midpoint == doctest::Approx(23.0));
        // P-mirror: P_h = P_{l+1-h}
        const std::uint64_t l = *e.period;
        for (std::uint64_t h = 1; h <= l; ++h) {
            CHECK(e.records[h].p == e.records[l + 1 - h].p);
        }
    }
    SUBCASE("sqrt(2): empty interior is trivially symmetric") {
        auto rep = creepers::detect_symmetry(expand(2, SeedMode::raw));
        CHECK(rep.palindrome);
        CHECK(rep.q_mirror);
        CHECK(rep.midpoint == doctest::Approx(0.5));
    }
}
