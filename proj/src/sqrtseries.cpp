#include "creepers/sqrtseries.hpp"

#include <stdexcept>

namespace creepers {

namespace series_detail {

std::vector<Rat> mul(std::span<const Rat> a, std::span<const Rat> b, std::size_t len) {
    std::vector<Rat> out(len, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rat> inv(std::span<const Rat> a, std::size_t len) {
    if (a.empty() || a[0] == 0) {
        throw std::domain_error("series inverse of a series with zero constant term");
    }
    std::vector<Rat> out(len, Rat(0));
    out[0] = 1 / a[0];
    for (std::size_t i = 1; i < len; ++i) {
        Rat s(0);
        const std::size_t jmax = std::min(i, a.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            s += a[j] * out[i - j];
        }
        out[i] = -s / a[0];
    }
    return out;
}

}  // namespace series_detail

SqrtSeries::SqrtSeries(int d, std::vector<Rat> window) : d_(d), window_(std::move(window)) {}

const Rat& SqrtSeries::coeff_at(int e) const {
    const int i = d_ - e;
    if (i < 0 || i >= static_cast<int>(window_.size())) {
        throw std::out_of_range("SqrtSeries::coeff_at outside the computed window");
    }
    return window_[static_cast<std::size_t>(i)];
}

RatPoly SqrtSeries::poly_part() const {
    std::vector<Rat> c(static_cast<std::size_t>(d_) + 1, Rat(0));
    for (int e = d_; e >= 0 && e >= d_ - depth(); --e) {
        c[static_cast<std::size_t>(e)] = coeff_at(e);
    }
    return RatPoly::from_coeffs(std::move(c));
}

std::vector<Rat> SqrtSeries::tail() const {
    std::vector<Rat> t;
    for (int e = -1; e >= d_ - depth(); --e) {
        t.push_back(coeff_at(e));
    }
    return t;
}

namespace {

/// Square root of a nonnegative rational that must be a square in Q.
Rat rat_sqrt(const Rat& c) {
    if (sgn(c) < 0 || !is_perfect_square(c.get_num()) || !is_perfect_square(c.get_den())) {
        throw std::domain_error(
            "not a real quadratic function field: leading coefficient is not a square in Q");
    }
    Rat r(isqrt(c.get_num()), isqrt(c.get_den()));
    r.canonicalize();
    return r;
}

}  // namespace

SqrtSeries sqrt_series(const RatPoly& d_poly, int depth) {
    if (d_poly.is_zero() || d_poly.degree() < 2 || d_poly.degree() % 2 != 0) {
        throw std::domain_error("not a real quadratic function field: degree must be even >= 2");
    }
    if (depth < 0) {
        throw std::domain_error("sqrt_series: negative depth");
    }
    const int deg = d_poly.degree();
    const int d = deg / 2;
    const Rat root_lc = rat_sqrt(d_poly.leading());

    // u(t) = D / (lc X^(2d)) in t = 1/X, so u[0] = 1; finitely many terms.
    const std::size_t len = static_cast<std::size_t>(depth) + 1;
    std::vector<Rat> u(len, Rat(0));
    for (std::size_t i = 0; i < len && static_cast<int>(i) <= deg; ++i) {
        u[i] = d_poly.coeff(static_cast<std::size_t>(deg - static_cast<int>(i))) / d_poly.leading();
    }

    // Newton for s = sqrt(u): s <- (s + u/s)/2, precision doubling.
    std::vector<Rat> s{Rat(1)};
    std::size_t prec = 1;
    while (prec < len) {
        prec = std::min(2 * prec, len);
        std::vector<Rat> si = series_detail::inv(s, prec);
        std::vector<Rat> t = series_detail::mul(u, si, prec);
        s.resize(prec, Rat(0));
        for (std::size_t i = 0; i < prec; ++i) {
            s[i] = (s[i] + t[i]) / 2;
        }
    }
    for (auto& c : s) {
        c *= root_lc;
    }
    return SqrtSeries(d, std::move(s));
}

}  // namespace creepers
