#include "creepers/units.hpp"

#include <stdexcept>

namespace creepers {

std::vector<Convergent> convergents(const Expansion& e) {
    if (e.records.empty()) {
        throw std::invalid_argument("convergents: expansion has no records");
    }
    std::vector<Convergent> out;
    out.reserve(e.records.size());
    Int pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    for (const auto& rec : e.records) {
        Int p = rec.a * pm1 + pm2;
        Int q = rec.a * qm1 + qm2;
        out.push_back({p, q, rec.h});
        pm2 = std::move(pm1);
        pm1 = std::move(p);
        qm2 = std::move(qm1);
        qm1 = std::move(q);
    }
    return out;
}

FundamentalUnit fundamental_unit(const Expansion& e) {
    if (!e.period) {
        throw std::domain_error("fundamental_unit: no period");
    }
    const std::uint64_t l = *e.period;
    // only rows 0 .. l-1 feed the continuants
    Int pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    for (std::uint64_t h = 0; h < l; ++h) {
        Int p = e.records[h].a * pm1 + pm2;
        Int q = e.records[h].a * qm1 + qm2;
        pm2 = std::move(pm1);
        pm1 = std::move(p);
        qm2 = std::move(qm1);
        qm1 = std::move(q);
    }
    const Int& p = pm1;
    const Int& q = qm1;
    if (e.sigma() == 1) {
        Int nrm = p * p - e.radicand.n * q * q;
        if (nrm != 1 && nrm != -1) {
            throw std::logic_error("fundamental_unit: norm equation violated");
        }
        return {p, q, static_cast<int>(nrm.get_si()), UnitForm::whole};
    }
    // sigma = 2: eps = q*(1+sqrt(D))/2 + (p - q) ... written as (u + v sqrt(D))/2
    Int u = 2 * p - q;
    Int v = q;
    Int nrm4 = u * u - e.radicand.source_d * v * v;
    if (nrm4 != 4 && nrm4 != -4) {
        throw std::logic_error("fundamental_unit: norm equation violated");
    }
    int nrm = sgn(nrm4) > 0 ? 1 : -1;
    if (u % 2 == 0 && v % 2 == 0) {
        return {u / 2, v / 2, nrm, UnitForm::whole};
    }
    return {u, v, nrm, UnitForm::half};
}

Regulator regulator(const Expansion& e, int precision_bits) {
    if (precision_bits < 32) {
        throw std::domain_error("regulator: precision_bits must be >= 32");
    }
    FundamentalUnit fu = fundamental_unit(e);
    const mpfr_prec_t wp = precision_bits + 32;
    // whole form is over sqrt(N); half form over sqrt(D), and sigma = 2
    // implies N = D, so the radicand serves both.
    BigFloat eps = BigFloat::of(fu.u, wp) + BigFloat::of(fu.v, wp) * BigFloat::sqrt_of(e.radicand.n, wp);
    if (fu.form == UnitForm::half) {
        eps = eps / BigFloat::of(2, wp);
    }
    return {eps.log(), precision_bits};
}

}  // namespace creepers
