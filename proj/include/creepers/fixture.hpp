#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "creepers/ffexpand.hpp"
#include "creepers/numbers.hpp"
#include "creepers/ratpoly.hpp"
#include "creepers/surd.hpp"

namespace creepers {

enum class FixtureKind { integer, polynomial };

/// One transcribed table row; any cell may be absent.
struct FixtureRow {
    std::uint64_t h = 0;
    std::optional<Int> a_int, p_int, q_int;
    std::optional<RatPoly> a_poly, p_poly, q_poly;
    std::optional<std::string> factors;  // canonical product, e.g. "2*67^5"

    bool operator==(const FixtureRow&) const = default;
};

/// A transcribed expansion table.  Integer cells of sigma = 2 tables are in
/// the printed display coordinates (see DisplayRow).
struct FixtureTable {
    std::string id;
    FixtureKind kind = FixtureKind::integer;
    std::optional<Int> x;  // resolves the "x" symbol in factor cells
    bool prefix_only = false;
    std::vector<std::string> columns;
    std::vector<FixtureRow> rows;

    bool operator==(const FixtureTable&) const = default;
};

/// Line-oriented fixture text:
///   #id=...  #kind=integer|polynomial  [#x=...]  #prefix=true|false
///   #columns=h,a,P,Q,factors
///   "##" comment lines; TAB-separated data rows, empty cells allowed.
/// Throws std::runtime_error carrying the offending line number.
FixtureTable parse_fixture(std::string_view text);
FixtureTable parse_fixture_file(const std::string& path);

std::string serialize_fixture(const FixtureTable& f);

struct Mismatch {
    std::uint64_t h;
    std::string column;
    std::string expected;
    std::string computed;
};

struct VerifyReport {
    std::size_t rows_checked = 0;
    std::size_t cells_matched = 0;
    std::size_t skipped_cells = 0;
    std::vector<Mismatch> mismatches;
    enum class Status { exact, prefix_exact, mismatch } status = Status::exact;
};

/// Cell-exact comparison of a computed integer expansion against a fixture.
/// sigma = 2 expansions are compared in display coordinates.  Factor cells
/// are checked against factor_pattern over `primes`: the cell's exponents on
/// the primes and its residual product must both match.  Full tables
/// (prefix=false) additionally require the period to close at the last row.
/// Throws std::invalid_argument on a kind mismatch.
VerifyReport verify(const Expansion& computed, const FixtureTable& fixture,
                    std::span<const Int> primes = {});

/// Coefficient-exact comparison for polynomial fixtures.
VerifyReport verify(const PolyExpansion& computed, const FixtureTable& fixture);

/// One factor of a parsed cell: base (family prime, "x", or plain integer)
/// raised to exp.
struct FactorToken {
    Int base;
    unsigned long exp;
};

/// Parse a canonical factor product like "3^2*11*5^2*7*x"; "x" resolves via
/// the fixture header.  Throws std::runtime_error on malformed input.
std::vector<FactorToken> parse_factor_expr(std::string_view expr, const std::optional<Int>& x);

}  // namespace creepers
