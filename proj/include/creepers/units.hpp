#pragma once

#include <cstdint>
#include <vector>

#include "creepers/bigfloat.hpp"
#include "creepers/numbers.hpp"
#include "creepers/surd.hpp"

namespace creepers {

/// Continuant pair p_h / q_h with p_h = a_h p_{h-1} + p_{h-2}.
struct Convergent {
    Int p;
    Int q;
    std::uint64_t h;
};

/// Convergents of every recorded row; seeds p_{-1}=1, p_{-2}=0, q_{-1}=0,
/// q_{-2}=1.
std::vector<Convergent> convergents(const Expansion& e);

enum class UnitForm {
    whole,  // eps = u + v sqrt(N),      u^2 - N v^2   = norm
    half,   // eps = (u + v sqrt(D))/2,  (u^2 - D v^2)/4 = norm
};

/// Fundamental unit read off the convergent at the period's end.  For
/// sigma = 2 seeding the natural form is (u + v sqrt(D))/2 with norm
/// equation u^2 - D v^2 = +-4; when u and v are both even it is reduced to
/// the whole +-1 form.  The norm equation is verified exactly.
struct FundamentalUnit {
    Int u;
    Int v;
    int norm;  // +1 or -1
    UnitForm form;
};

/// Throws std::domain_error("no period") on a truncated expansion.
FundamentalUnit fundamental_unit(const Expansion& e);

struct Regulator {
    BigFloat value;  // ln(eps) > 0
    int precision_bits;
};

/// ln of the fundamental unit, from the exact (u, v) via one high-precision
/// logarithm.  Requires precision_bits >= 32; the result carries
/// |value - ln eps| < 2^(4 - precision_bits) |ln eps|.
Regulator regulator(const Expansion& e, int precision_bits);

}  // namespace creepers
