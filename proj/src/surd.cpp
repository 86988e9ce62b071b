#include "creepers/surd.hpp"

#include <stdexcept>

namespace creepers {

int Expansion::sigma() const {
    return (seed_mode == SeedMode::order && radicand.source_d % 4 == 1) ? 2 : 1;
}

DisplayRow display_row(const Expansion& e, const ExpansionRecord& r) {
    if (e.sigma() == 2) {
        return {r.h, r.a, (r.p - 1) / 2, r.q / 2};
    }
    return {r.h, r.a, r.p, r.q};
}

std::pair<Radicand, SurdState> seed(const Int& d, SeedMode mode) {
    if (sgn(d) <= 0) {
        throw std::domain_error("seed: discriminant must be positive");
    }
    Int n;
    SurdState st;
    if (mode == SeedMode::order) {
        const unsigned long res = mpz_fdiv_ui(d.get_mpz_t(), 4);
        if (res == 0) {
            n = d / 4;
            st.p = 0;
            st.q = 1;
        } else if (res == 1) {
            n = d;
            st.p = 1;
            st.q = 2;
        } else {
            throw std::domain_error("seed: not a discriminant (D = 2,3 mod 4)");
        }
    } else {
        n = d;
        st.p = 0;
        st.q = 1;
    }
    if (is_perfect_square(n)) {
        throw std::domain_error("seed: rational surd (perfect square)");
    }
    return {Radicand{n, isqrt(n), d}, st};
}

std::pair<Int, SurdState> step(const SurdState& s, const Radicand& r) {
    if (sgn(s.q) == 0) {
        throw std::invalid_argument("step: Q is zero");
    }
    Int rem = (r.n - s.p * s.p) % s.q;
    if (sgn(rem) != 0) {
        throw std::invalid_argument("step: inadmissible state, Q does not divide N - P^2");
    }
    Int num = s.p + r.isqrt_n;
    if (sgn(s.q) < 0) {
        num += 1;
    }
    Int a = fdiv(num, s.q);
    SurdState next;
    next.p = a * s.q - s.p;
    // exact: N - P'^2 = (N - P^2) + Q(2aP - a^2 Q)
    mpz_divexact(next.q.get_mpz_t(), Int(r.n - next.p * next.p).get_mpz_t(), s.q.get_mpz_t());
    next.h = s.h + 1;
    return {std::move(a), std::move(next)};
}

Expansion expand(const Int& d, SeedMode mode, std::uint64_t max_steps) {
    if (max_steps == 0) {
        throw std::domain_error("expand: max_steps must be positive");
    }
    auto [rad, st] = seed(d, mode);
    Expansion e{std::move(rad), mode, {}, std::nullopt, false};
    Int p1, q1;
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        auto [a, next] = step(st, e.radicand);
        e.records.push_back({st.h, std::move(a), st.p, st.q});
        if (st.h == 0) {
            p1 = next.p;
            q1 = next.q;
        } else if (next.p == p1 && next.q == q1) {
            e.period = st.h;
            return e;
        }
        st = std::move(next);
    }
    e.truncated = true;
    return e;
}

SymmetryReport detect_symmetry(const Expansion& e) {
    if (!e.period) {
        throw std::domain_error("detect_symmetry: no period");
    }
    const std::uint64_t l = *e.period;
    bool palindrome = true;
    bool q_mirror = true;
    for (std::uint64_t h = 1; h < l; ++h) {
        if (e.records[h].a != e.records[l - h].a) {
            palindrome = false;
        }
        if (e.records[h].q != e.records[l - h].q) {
            q_mirror = false;
        }
    }
    return {palindrome, q_mirror, static_cast<double>(l) / 2.0};
}

}  // namespace creepers
