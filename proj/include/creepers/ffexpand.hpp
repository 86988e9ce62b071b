#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "creepers/ratpoly.hpp"

namespace creepers {

struct PolyRecord {
    std::uint64_t h;
    RatPoly a;
    RatPoly p;
    RatPoly q;
};

struct PolyExpansion {
    RatPoly d;
    std::vector<PolyRecord> records;
    std::optional<std::uint64_t> period;
    /// First h >= 1 with Q_h a nonzero constant other than 1 (quasi-period
    /// point); the expansion continues past it.
    std::optional<std::pair<std::uint64_t, Rat>> quasi_marker;
    bool truncated = false;
};

/// Continued fraction of sqrt(D) in Q((1/X)): P_0 = 0, Q_0 = 1,
/// a_h = polynomial part of (P_h + sqrt(D))/Q_h, P' = aQ - P,
/// Q' = (D - P'^2)/Q exact.  Stops on (P,Q) = (P_1,Q_1) (period) or after
/// max_steps rows (truncated).
///
/// The polynomial part is read off a truncated sqrt(D) series whose depth
/// starts at 4d+4 (or initial_depth when positive) and doubles whenever the
/// step's exactness margin - the number of exact quotient coefficients
/// below X^0 - would fall under d+1.
///
/// Throws std::domain_error for odd degree, non-square leading coefficient,
/// or a perfect-square D.
PolyExpansion ff_expand(const RatPoly& d, std::uint64_t max_steps = 1000,
                        int initial_depth = 0);

}  // namespace creepers
