#include "creepers/ffexpand.hpp"

#include <stdexcept>

#include "creepers/sqrtseries.hpp"

namespace creepers {

namespace {

/// Polynomial part of (P + sqrt(D))/Q from the series window.  The window
/// covers exponents d..d-k exactly; dividing by Q of degree m leaves the
/// quotient exact down to exponent d-k-m+m = d-k, i.e. k+m-d coefficients
/// below X^0 are still exact.
RatPoly poly_part_of_quotient(const RatPoly& p, const RatPoly& q, const SqrtSeries& y) {
    const int d = y.degree();
    const int k = y.depth();
    const int m = q.degree();
    const std::size_t len = static_cast<std::size_t>(k) + 1;

    std::vector<Rat> num(len, Rat(0));
    for (int i = 0; i <= k; ++i) {
        num[static_cast<std::size_t>(i)] = y.coeff_at(d - i);
    }
    for (int e = p.degree(); e >= 0; --e) {
        num[static_cast<std::size_t>(d - e)] += p.coeff(static_cast<std::size_t>(e));
    }

    // Q(X) = X^m (q_m + q_{m-1} t + ...), t = 1/X
    std::vector<Rat> qs(len, Rat(0));
    for (int i = 0; i <= m && i <= k; ++i) {
        qs[static_cast<std::size_t>(i)] = q.coeff(static_cast<std::size_t>(m - i));
    }
    std::vector<Rat> quot =
        series_detail::mul(num, series_detail::inv(qs, len), len);  // coeff of X^(d-m-i)

    const int top = d - m;
    std::vector<Rat> a(static_cast<std::size_t>(top) + 1, Rat(0));
    for (int e = top; e >= 0; --e) {
        a[static_cast<std::size_t>(e)] = quot[static_cast<std::size_t>(top - e)];
    }
    return RatPoly::from_coeffs(std::move(a));
}

}  // namespace

PolyExpansion ff_expand(const RatPoly& d_poly, std::uint64_t max_steps, int initial_depth) {
    if (max_steps == 0) {
        throw std::domain_error("ff_expand: max_steps must be positive");
    }
    const int deg = d_poly.degree();
    // probe series: validates degree/leading coefficient and covers the
    // polynomial part, so a square D is recognized whatever depth was asked
    SqrtSeries probe = sqrt_series(d_poly, deg / 2 + 1);
    const int d = deg / 2;
    {
        RatPoly root = probe.poly_part();
        if (root * root == d_poly) {
            throw std::domain_error("ff_expand: D is a perfect square polynomial");
        }
    }
    int k = initial_depth > 0 ? initial_depth : 4 * d + 4;
    SqrtSeries y = sqrt_series(d_poly, k);

    PolyExpansion e;
    e.d = d_poly;
    RatPoly p;           // zero
    RatPoly q(1);
    RatPoly p1_first, q1_first;
    for (std::uint64_t h = 0; h < max_steps; ++h) {
        const int m = q.degree();
        while (k + m - d < d + 1) {
            k *= 2;
            y = sqrt_series(d_poly, k);
        }
        RatPoly a = poly_part_of_quotient(p, q, y);
        if (h >= 1 && a.degree() < 1) {
            throw std::logic_error("ff_expand: partial quotient degenerated to a constant");
        }
        e.records.push_back({h, a, p, q});

        RatPoly p_next = a * q - p;
        auto [q_next, rem] = divmod(d_poly - p_next * p_next, q);
        if (!rem.is_zero()) {
            throw std::logic_error("ff_expand: D - P'^2 not divisible by Q");
        }
        if (!e.quasi_marker && q_next.degree() == 0 && q_next != RatPoly(1)) {
            e.quasi_marker = {{h + 1, q_next.coeff(0)}};
        }
        if (h == 0) {
            p1_first = p_next;
            q1_first = q_next;
        } else if (p_next == p1_first && q_next == q1_first) {
            e.period = h;
            return e;
        }
        p = std::move(p_next);
        q = std::move(q_next);
    }
    e.truncated = true;
    return e;
}

}  // namespace creepers
