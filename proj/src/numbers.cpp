#include "creepers/numbers.hpp"

#include <stdexcept>

namespace creepers {

Int isqrt(const Int& n) {
    if (sgn(n) < 0) {
        throw std::domain_error("isqrt: negative input");
    }
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int fdiv(const Int& a, const Int& b) {
    if (sgn(b) == 0) {
        throw std::domain_error("fdiv: division by zero");
    }
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace creepers
