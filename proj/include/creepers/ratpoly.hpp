#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "creepers/numbers.hpp"

namespace creepers {

/// Dense univariate polynomial over exact rationals, coefficients stored in
/// ascending degree with no trailing zeros (the zero polynomial is empty).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(const Rat& constant);
    explicit RatPoly(long constant);

    static RatPoly monomial(const Rat& c, std::size_t e);
    static RatPoly from_coeffs(std::vector<Rat> ascending);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of X^e (zero beyond the degree).
    const Rat& coeff(std::size_t e) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// (quotient, remainder) with f = q*g + r and deg r < deg g; exact rational
/// arithmetic.  Throws std::domain_error when g is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

/// Canonical text: terms in descending degree, coefficients "p" or "p/q",
/// "X" for degree one, bare constant for degree zero, " + " / " - "
/// separators; e.g. "2*X^3 - X^2 - 2".  The zero polynomial prints "0".
std::string to_text(const RatPoly& p);

/// Parse of the canonical text; throws std::runtime_error on malformed
/// input.
RatPoly poly_from_text(std::string_view text);

}  // namespace creepers
