#pragma once

#include <span>
#include <vector>

#include "creepers/ratpoly.hpp"

namespace creepers {

/// Truncated Laurent expansion of sqrt(D) at infinity for D of even degree
/// 2d: the exact coefficients of X^d, X^(d-1), ..., X^(d-k).  Squaring the
/// window reproduces D through O(X^(2d-k)).
class SqrtSeries {
  public:
    SqrtSeries(int d, std::vector<Rat> window);

    int degree() const { return d_; }
    /// Truncation depth k; exponents d .. d-k are exact.
    int depth() const { return static_cast<int>(window_.size()) - 1; }
    /// Coefficient of X^e for d-k <= e <= d.
    const Rat& coeff_at(int e) const;

    /// The polynomial part (exponents >= 0); equals floor(sqrt(D)) once the
    /// depth covers degree d.
    RatPoly poly_part() const;
    /// Coefficients of X^-1, X^-2, ..., X^(d-k).
    std::vector<Rat> tail() const;

  private:
    int d_;
    std::vector<Rat> window_;  // window_[i] = coefficient of X^(d-i)
};

/// Newton iteration on the series; requires even degree >= 2 and a leading
/// coefficient that is a square in Q, else throws std::domain_error
/// ("not a real quadratic function field").
SqrtSeries sqrt_series(const RatPoly& d, int depth);

namespace series_detail {

/// Truncated product of two power series (ascending coefficients), length
/// `len`.
std::vector<Rat> mul(std::span<const Rat> a, std::span<const Rat> b, std::size_t len);

/// Truncated reciprocal; a[0] must be nonzero.
std::vector<Rat> inv(std::span<const Rat> a, std::size_t len);

}  // namespace series_detail

}  // namespace creepers
