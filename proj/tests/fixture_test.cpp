#include "creepers/fixture.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "creepers/families.hpp"
#include "doctest.h"

using creepers::expand;
using creepers::Expansion;
using creepers::FixtureKind;
using creepers::FixtureTable;
using creepers::Int;
using creepers::parse_fixture;
using creepers::parse_fixture_file;
using creepers::SeedMode;
using creepers::serialize_fixture;
using creepers::verify;
using creepers::VerifyReport;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(CREEPERS_FIXTURE_DIR) + "/" + name + ".tsv";
}

const char* kShippedIntegerFixtures[][2] = {
    // fixture id, family (n and divisor recovered below)
    {"easy-kreeper-67.n6", "easy-kreeper-67"},
    {"lkreeper-43.n11", "lkreeper-43"},
    {"negl-131.n6", "negl-131"},
    {"ml-2.n26", "ml-2"},
    {"ml-11.n15", "ml-11"},
    {"sq-1319011.n8", "sq-1319011"},
    {"sq-1319011-div15.n8", "sq-1319011"},
    {"higher-3a.n14", "higher-3a"},
};

struct IntegerReplay {
    FixtureTable fixture;
    Expansion expansion;
    const creepers::FamilySpec* family;
    Int d;
};

long n_of(const std::string& id) {
    const auto pos = id.rfind(".n");
    return std::stol(id.substr(pos + 2));
}

IntegerReplay replay(const std::string& id, const std::string& family) {
    IntegerReplay r{parse_fixture_file(fixture_path(id)), {}, &creepers::find_family(family), 0};
    const Int divisor = id.find("div15") != std::string::npos ? 15 : 1;
    r.d = creepers::discriminant(*r.family, n_of(id), divisor);
    const std::uint64_t steps =
        r.fixture.prefix_only ? r.fixture.rows.back().h + 1 : 1000000;
    r.expansion = expand(r.d, SeedMode::order, steps);
    return r;
}

}  // namespace

TEST_CASE("parse: a table-row line from the easy kreeper") {
    FixtureTable f = parse_fixture(
        "#id=t\n#kind=integer\n#prefix=false\n#columns=h,a,P,Q,factors\n"
        "0\t633208675188\t0\t1\t\n"
        "5\t469\t633208675187\t2700250214\t2*67^5\n");
    REQUIRE(f.rows.size() == 2);
    CHECK(f.rows[1].h == 5);
    CHECK(*f.rows[1].a_int == 469);
    CHECK(*f.rows[1].p_int == Int("633208675187"));
    CHECK(*f.rows[1].q_int == Int("2700250214"));
    CHECK(*f.rows[1].factors == "2*67^5");
}

TEST_CASE("parse: a row carrying only a and factors") {
    FixtureTable f = parse_fixture(
        "#id=t\n#kind=integer\n#x=1319011\n#prefix=true\n#columns=h,a,P,Q,factors\n"
        "0\t4\t\t1\t\n"
        "2\t408144037624565082345625145279739816272309\t\t\t3^2*11*5^2*7*x\n");
    REQUIRE(f.rows.size() == 2);
    CHECK(f.rows[1].a_int.has_value());
    CHECK_FALSE(f.rows[1].p_int.has_value());
    CHECK_FALSE(f.rows[1].q_int.has_value());
    CHECK(f.rows[1].factors.has_value());
    // empty factor cell is absent, not an error
    CHECK_FALSE(f.rows[0].factors.has_value());

    auto toks = creepers::parse_factor_expr(*f.rows[1].factors, f.x);
    Int v = 1;
    for (const auto& t : toks) {
        v *= creepers::pow_int(t.base, t.exp);
    }
    CHECK(v == Int(9) * 11 * 25 * 7 * 1319011);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_throw = [](const char* text, const char* needle) {
        try {
            parse_fixture(text);
            FAIL_CHECK("no exception for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,a\n0\tzz\n", "line 5");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n0\t1\n", "line 4");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,a\n1\t2\n", "first row");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,a\n0\t2\n0\t2\n",
                 "strictly increasing");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,a\n0\t1\t9\n", "more cells");
    expect_throw("#id=t\n#kind=bogus\n#prefix=false\n#columns=h,a\n", "kind");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,w\n", "unknown column");
    expect_throw("#id=t\n#kind=integer\n#prefix=false\n#columns=h,a\n0\n", "none of");
    CHECK_THROWS(parse_fixture("#id=t\n"));  // missing headers
}

TEST_CASE("shipped fixtures: parse -> serialize -> parse is the identity") {
    const char* names[] = {"easy-kreeper-67.n6", "lkreeper-43.n11",    "negl-131.n6",
                           "ml-2.n26",           "ml-11.n15",          "sq-1319011.n8",
                           "sq-1319011-div15.n8", "higher-3a.n14",     "sleepers-leprevost",
                           "sleepers-elkies",    "ffkreeper.n9"};
    for (const char* name : names) {
        CAPTURE(name);
        FixtureTable once = parse_fixture_file(fixture_path(name));
        FixtureTable twice = parse_fixture(serialize_fixture(once));
        CHECK(once == twice);
    }
}

TEST_CASE("shipped sigma=1 fixtures pass the admissibility pre-check") {
    // Q | N - P^2 row by row, independent of the engine
    for (const auto& [id, family] : kShippedIntegerFixtures) {
        FixtureTable f = parse_fixture_file(fixture_path(id));
        const Int divisor = std::string(id).find("div15") != std::string::npos ? 15 : 1;
        Int d = creepers::discriminant(creepers::find_family(family), n_of(id), divisor);
        if (d % 4 != 0) {
            continue;  // sigma = 2 display coordinates; engine replay covers those
        }
        Int n = d / 4;
        CAPTURE(id);
        for (const auto& row : f.rows) {
            if (!row.p_int) {
                continue;
            }
            Int q;
            if (row.q_int) {
                q = *row.q_int;
            } else if (row.factors) {
                q = 1;
                for (const auto& t : creepers::parse_factor_expr(*row.factors, f.x)) {
                    q *= creepers::pow_int(t.base, t.exp);
                }
            } else {
                continue;
            }
            CHECK((n - *row.p_int * *row.p_int) % q == 0);
        }
    }
}

TEST_CASE("shipped sigma=2 fixtures satisfy the omega-coordinate admissibility") {
    // display rows are states of (P' + w)/Q' with w = (1+sqrt(D))/2:
    // Q' divides P'^2 + P' + (1 - D)/4
    for (const char* id : {"negl-131.n6", "ml-2.n26"}) {
        CAPTURE(id);
        FixtureTable f = parse_fixture_file(fixture_path(id));
        const char* family = std::string(id).find("negl") == 0 ? "negl-131" : "ml-2";
        Int d = creepers::discriminant(creepers::find_family(family), n_of(id));
        REQUIRE(d % 4 == 1);
        for (const auto& row : f.rows) {
            if (!row.p_int || !row.q_int) {
                continue;
            }
            Int norm = *row.p_int * *row.p_int + *row.p_int + (1 - d) / 4;
            CHECK(norm % *row.q_int == 0);
        }
    }
}

TEST_CASE("every shipped integer fixture replays exactly") {
    for (const auto& [id, family] : kShippedIntegerFixtures) {
        CAPTURE(id);
        IntegerReplay r = replay(id, family);
        VerifyReport rep = verify(r.expansion, r.fixture, r.family->primes);
        for (const auto& m : rep.mismatches) {
            CAPTURE(m.h);
            CAPTURE(m.column);
            CHECK(m.expected == m.computed);
        }
        CHECK(rep.mismatches.empty());
        CHECK(rep.rows_checked == r.fixture.rows.size());
        CHECK(rep.status == (r.fixture.prefix_only ? VerifyReport::Status::prefix_exact
                                                   : VerifyReport::Status::exact));
    }
}

TEST_CASE("easy-kreeper n=6 fixture: status exact over 47 rows") {
    IntegerReplay r = replay("easy-kreeper-67.n6", "easy-kreeper-67");
    VerifyReport rep = verify(r.expansion, r.fixture, r.family->primes);
    CHECK(rep.status == VerifyReport::Status::exact);
    CHECK(rep.rows_checked == 47);
    CHECK(rep.skipped_cells > 0);  // blank factor cells skip
}

TEST_CASE("lkreeper fixture (normalized comma typo) is exact; Q_67 = 5 * 43^8") {
    IntegerReplay r = replay("lkreeper-43.n11", "lkreeper-43");
    VerifyReport rep = verify(r.expansion, r.fixture, r.family->primes);
    CHECK(rep.status == VerifyReport::Status::exact);
    CHECK(r.expansion.records[67].q == 5 * creepers::pow_int(43, 8));
}

TEST_CASE("an injected fault is reported as a single mismatch") {
    IntegerReplay r = replay("easy-kreeper-67.n6", "easy-kreeper-67");
    REQUIRE(*r.fixture.rows[4].q_int == 737);
    r.fixture.rows[4].q_int = 739;
    r.fixture.rows[4].factors.reset();  // keep the fault localized to Q
    VerifyReport rep = verify(r.expansion, r.fixture, r.family->primes);
    CHECK(rep.status == VerifyReport::Status::mismatch);
    REQUIRE(rep.mismatches.size() == 1);
    CHECK(rep.mismatches[0].h == 4);
    CHECK(rep.mismatches[0].column == "Q");
    CHECK(rep.mismatches[0].expected == "739");
    CHECK(rep.mismatches[0].computed == "737");
}

TEST_CASE("kind mismatch is an error") {
    IntegerReplay r = replay("easy-kreeper-67.n6", "easy-kreeper-67");
    FixtureTable poly = parse_fixture_file(fixture_path("sleepers-leprevost"));
    CHECK_THROWS_AS(verify(r.expansion, poly), std::invalid_argument);

    auto pe = creepers::ff_expand(creepers::poly_from_text("X^2 + 2"), 10);
    CHECK_THROWS_AS(verify(pe, r.fixture), std::invalid_argument);
}

TEST_CASE("polynomial fixtures replay coefficient-exactly") {
    SUBCASE("Leprevost") {
        FixtureTable f = parse_fixture_file(fixture_path("sleepers-leprevost"));
        auto e = creepers::ff_expand(
            creepers::poly_from_text("4*X^6 - 4*X^5 + X^4 - 8*X^3 + 20*X^2 - 16*X + 4"), 1000);
        VerifyReport rep = verify(e, f);
        CHECK(rep.status == VerifyReport::Status::exact);
        CHECK(rep.rows_checked == 23);
        CHECK(rep.cells_matched == 23 * 3);
    }
    SUBCASE("Elkies prefix") {
        FixtureTable f = parse_fixture_file(fixture_path("sleepers-elkies"));
        auto e = creepers::ff_expand(
            creepers::poly_from_text("X^6 - 2*X^5 - 4*X^4 + 2*X^3 + 37/4*X^2 - 15/2*X + 9/4"), 50);
        VerifyReport rep = verify(e, f);
        CHECK(rep.status == VerifyReport::Status::prefix_exact);
        CHECK(rep.rows_checked == 50);
    }
    SUBCASE("function-field kreeper, merged a and P/Q tables") {
        FixtureTable f = parse_fixture_file(fixture_path("ffkreeper.n9"));
        auto e = creepers::ff_expand(
            creepers::poly_from_text("X^18 + 2*X^12 + 2*X^11 + 2*X^9 + X^6 + 2*X^5 + 5*X^4 + "
                                     "6*X^3 + 6*X^2 + 4*X + 1"),
            1000);
        VerifyReport rep = verify(e, f);
        CHECK(rep.status == VerifyReport::Status::exact);
        CHECK(rep.rows_checked == 21);
    }
}

TEST_CASE("a full-table fixture detects a missing period") {
    FixtureTable f = parse_fixture_file(fixture_path("sleepers-leprevost"));
    // too few steps: the expansion truncates before closing
    auto e = creepers::ff_expand(
        creepers::poly_from_text("4*X^6 - 4*X^5 + X^4 - 8*X^3 + 20*X^2 - 16*X + 4"), 10);
    VerifyReport rep = verify(e, f);
    CHECK(rep.status == VerifyReport::Status::mismatch);
}
