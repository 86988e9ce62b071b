#include "creepers/families.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "creepers/surd.hpp"

namespace creepers {

Int PolyInN::eval(const Int& x, long n) const {
    Int acc = constant;
    for (const auto& t : terms) {
        const long e = static_cast<long>(t.alpha) * n + t.beta;
        if (e < 0) {
            throw std::domain_error("family term exponent negative at this n");
        }
        acc += t.c * pow_int(x, static_cast<unsigned long>(e));
    }
    return acc;
}

const std::vector<FamilySpec>& registry() {
    static const std::vector<FamilySpec> fams = [] {
        std::vector<FamilySpec> v;
        // D_n = (14*67^n + 8)^2 + 88*67^n
        v.push_back({"easy-kreeper-67", 67,
                     {{{14, 1, 0}}, 8},
                     {{{88, 1, 0}}, 0},
                     {2, 11, 67}, {1}, std::nullopt, 1});
        // D_n = (10*43^n + 39750)^2 + 140*43^n
        v.push_back({"lkreeper-43", 43,
                     {{{10, 1, 0}}, 39750},
                     {{{140, 1, 0}}, 0},
                     {2, 5, 7, 43}, {1}, std::nullopt, 1});
        // D_n = (77*131^n + 14)^2 - 644*131^n
        v.push_back({"negl-131", 131,
                     {{{77, 1, 0}}, 14},
                     {{{-644, 1, 0}}, 0},
                     {7, 23, 131}, {1}, std::nullopt, 1});
        // D_n = (2^n - 31)^2 + 44*2^n
        v.push_back({"ml-2", 2,
                     {{{1, 1, 0}}, -31},
                     {{{44, 1, 0}}, 0},
                     {2, 5, 11}, {1}, std::nullopt, 1});
        // D_n = (4*11^n + 844)^2 + 48*11^n, creeping for n = 3 (mod 12)
        v.push_back({"ml-11", 11,
                     {{{4, 1, 0}}, 844},
                     {{{48, 1, 0}}, 0},
                     {2, 3, 7, 11}, {1}, NCongruence{3, 12}, 1});
        // D_n = (1018*1319011^n + 65290957)^2 + 356300*1319011^n,
        // optionally expanded as D_n / 15^2
        v.push_back({"sq-1319011", 1319011,
                     {{{1018, 1, 0}}, 65290957},
                     {{{356300, 1, 0}}, 0},
                     {3, 5, 7, 11, 509, 1319011}, {1, 15}, std::nullopt, 1});
        // D_n = (3^(2n+2) + 3^(n+2) + 3^n - 1)^2 + 4*3^n
        v.push_back({"higher-3a", 3,
                     {{{1, 2, 2}, {1, 1, 2}, {1, 1, 0}}, -1},
                     {{{4, 1, 0}}, 0},
                     {3}, {1}, std::nullopt, 1});
        // D_n = (3^(2n+3) - 31*3^n + 10)^2 + 40*3^n
        v.push_back({"higher-3b", 3,
                     {{{1, 2, 3}, {-31, 1, 0}}, 10},
                     {{{40, 1, 0}}, 0},
                     {2, 3, 5}, {1}, std::nullopt, 1});
        return v;
    }();
    return fams;
}

const FamilySpec& find_family(std::string_view name) {
    for (const auto& f : registry()) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::domain_error("unknown family: " + std::string(name));
}

Int discriminant(const FamilySpec& f, long n, const Int& square_divisor) {
    if (n < f.n_min) {
        throw std::domain_error(f.name + ": n below family minimum");
    }
    if (f.n_constraint) {
        const auto& c = *f.n_constraint;
        if (((n % c.modulus) + c.modulus) % c.modulus != c.residue) {
            throw std::domain_error(f.name + ": n violates n = " + std::to_string(c.residue) +
                                    " (mod " + std::to_string(c.modulus) + ")");
        }
    }
    Int s = f.s.eval(f.x, n);
    Int d = s * s + f.t.eval(f.x, n);
    if (sgn(d) <= 0) {
        throw std::domain_error(f.name + ": D_n is not positive");
    }
    if (square_divisor != 1) {
        if (std::find(f.square_divisors.begin(), f.square_divisors.end(), square_divisor) ==
            f.square_divisors.end()) {
            throw std::domain_error(f.name + ": square divisor not offered by this family");
        }
        Int f2 = square_divisor * square_divisor;
        if (!mpz_divisible_p(d.get_mpz_t(), f2.get_mpz_t())) {
            throw std::domain_error(f.name + ": square divisor^2 does not divide D_n");
        }
        d /= f2;
    }
    if (is_perfect_square(d)) {
        throw std::domain_error(f.name + ": D_n is a perfect square");
    }
    return d;
}

FactorPattern factor_pattern(const Int& q, std::span<const Int> primes) {
    if (sgn(q) <= 0) {
        throw std::domain_error("factor_pattern: Q must be >= 1");
    }
    FactorPattern fp;
    fp.cofactor = q;
    for (const Int& p : primes) {
        unsigned long e = 0;
        while (mpz_divisible_p(fp.cofactor.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(fp.cofactor.get_mpz_t(), fp.cofactor.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) {
            fp.exponents.emplace(p, e);
        }
    }
    return fp;
}

std::vector<ScanRow> scan_periods(const FamilySpec& f, long n_from, long n_to,
                                  std::uint64_t max_steps) {
    if (n_to < n_from) {
        throw std::domain_error("scan_periods: empty n range");
    }
    const std::size_t count = static_cast<std::size_t>(n_to - n_from + 1);
    std::vector<ScanRow> out(count);
    std::atomic<std::size_t> cursor{0};

    auto work = [&] {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= count) {
                return;
            }
            const long n = n_from + static_cast<long>(idx);
            ScanRow row;
            row.n = n;
            try {
                Int d = discriminant(f, n);
                Expansion e = expand(d, SeedMode::order, max_steps);
                if (e.period) {
                    row.period = *e.period;
                }
                for (const auto& rec : e.records) {
                    DisplayRow dr = display_row(e, rec);
                    if (factor_pattern(dr.q, f.primes).cofactor == 1) {
                        ++row.pure_pattern_rows;
                    }
                }
            } catch (const std::exception& ex) {
                row.error = ex.what();
            }
            out[idx] = std::move(row);
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    return out;
}

}  // namespace creepers
