#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "creepers/numbers.hpp"

namespace creepers {

enum class SeedMode { order, raw };

/// The number under the root, together with the discriminant it came from.
/// For a discriminant D of a real quadratic order the expansion runs over
/// sqrt(D/4) when D = 0 (mod 4) and over sqrt(D) when D = 1 (mod 4).
struct Radicand {
    Int n;         // radicand actually expanded; positive, not a square
    Int isqrt_n;   // cached floor(sqrt(n))
    Int source_d;  // D the radicand was derived from; n or 4n
};

/// One state of the quadratic-irrational machine: the complete quotient
/// (P + sqrt(N)) / Q.  Admissibility Q | N - P^2 keeps the recurrence
/// integral.
struct SurdState {
    Int p;
    Int q;
    std::uint64_t h = 0;
};

/// One table row: partial quotient a_h taken at state (P_h, Q_h).
struct ExpansionRecord {
    std::uint64_t h;
    Int a;
    Int p;
    Int q;
};

struct Expansion {
    Radicand radicand;
    SeedMode seed_mode;
    std::vector<ExpansionRecord> records;
    std::optional<std::uint64_t> period;
    bool truncated = false;

    /// 2 for order seeding of D = 1 (mod 4), else 1.
    int sigma() const;
};

/// Row in the coordinates the expansion tables print.  sigma = 2 tables run
/// the machine on (P' + w)/Q' with w = (1 + sqrt(D))/2, which is our state
/// under P = 2P' + 1, Q = 2Q'; P is always odd and Q always even there.
struct DisplayRow {
    std::uint64_t h;
    Int a;
    Int p;
    Int q;
};

DisplayRow display_row(const Expansion& e, const ExpansionRecord& r);

/// Initial state for a discriminant.
///   order mode: D = 0 (mod 4) -> N = D/4, (P,Q) = (0,1)
///               D = 1 (mod 4) -> N = D,   (P,Q) = (1,2)
///   raw mode:   N = D, (P,Q) = (0,1)
/// Throws std::domain_error for a perfect square (rational surd) or, in
/// order mode, for D = 2,3 (mod 4) (not a discriminant).
std::pair<Radicand, SurdState> seed(const Int& d, SeedMode mode);

/// One step of the recurrence.  Returns the partial quotient
/// a = floor((P + sqrt(N))/Q) and the next state
///   P' = aQ - P,  Q' = (N - P'^2)/Q  (exact).
/// Q < 0 states use floor((P + isqrt(N) + 1)/Q); floor division always
/// rounds toward -infinity.  Throws std::invalid_argument when the state is
/// inadmissible.
std::pair<Int, SurdState> step(const SurdState& s, const Radicand& r);

/// Full expansion: records rows h = 0.. until the state after row h equals
/// (P_1, Q_1) (period = h, the closing row is included) or until max_steps
/// rows were emitted (truncated).
Expansion expand(const Int& d, SeedMode mode, std::uint64_t max_steps = 1000000);

struct SymmetryReport {
    bool palindrome;  // a_1 .. a_{l-1} reads the same reversed
    bool q_mirror;    // Q_h = Q_{l-h} for 1 <= h <= l-1
    double midpoint;  // l / 2
};

/// Symmetry of a periodic expansion.  Throws std::domain_error("no period")
/// when the expansion is truncated.
SymmetryReport detect_symmetry(const Expansion& e);

}  // namespace creepers
