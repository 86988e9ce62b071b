#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "creepers/numbers.hpp"

namespace creepers {

/// c * x^(alpha*n + beta) as a function of the family parameter n.
struct PowerTerm {
    Int c;
    unsigned alpha;
    int beta;
};

/// Sum of power terms plus a constant; the S and T of D_n = S(n)^2 + T(n).
struct PolyInN {
    std::vector<PowerTerm> terms;
    Int constant;

    Int eval(const Int& x, long n) const;
};

struct NCongruence {
    unsigned residue;
    unsigned modulus;
};

/// One parameterized discriminant family D_n = S(n)^2 + T(n) over base x.
/// `primes` is the set of factor-pattern bases the tables factor Q_h over
/// (for sq-1319011 the base itself appears as an atomic entry even though
/// it is composite; the entries are pairwise coprime).
struct FamilySpec {
    std::string name;
    Int x;
    PolyInN s;
    PolyInN t;
    std::vector<Int> primes;
    std::vector<Int> square_divisors;  // allowed f with D_n / f^2 expansions
    std::optional<NCongruence> n_constraint;
    long n_min = 1;
};

/// The built-in families, one per expansion table heading.
const std::vector<FamilySpec>& registry();

/// Lookup by CLI name; throws std::domain_error for an unknown name.
const FamilySpec& find_family(std::string_view name);

/// Exact D_n (divided by f^2 when a square divisor f is selected).
/// Throws std::domain_error on constraint violation, nonpositive or
/// perfect-square D_n, or a divisor that is not allowed / does not divide.
Int discriminant(const FamilySpec& f, long n, const Int& square_divisor = 1);

/// Q = cofactor * prod p^e with the cofactor coprime to every entry.
struct FactorPattern {
    Int cofactor;
    std::map<Int, unsigned long> exponents;  // zero exponents omitted
};

FactorPattern factor_pattern(const Int& q, std::span<const Int> primes);

struct ScanRow {
    long n;
    std::optional<std::uint64_t> period;  // empty = truncated or error
    std::uint64_t pure_pattern_rows = 0;  // rows whose Q factors fully over the primes
    std::string error;                    // nonempty when discriminant generation failed
};

/// Expands every n in [n_from, n_to], concurrently; per-n errors are
/// reported in the row, not thrown.
std::vector<ScanRow> scan_periods(const FamilySpec& f, long n_from, long n_to,
                                  std::uint64_t max_steps = 1000000);

}  // namespace creepers
