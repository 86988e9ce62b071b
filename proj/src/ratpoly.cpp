#include "creepers/ratpoly.hpp"

#include <stdexcept>

namespace creepers {

namespace {
const Rat kZero(0);

Rat parse_rat(std::string_view s) {
    const auto slash = s.find('/');
    auto parse_z = [](std::string_view t) {
        if (t.empty()) {
            throw std::runtime_error("empty number");
        }
        Int v;
        if (mpz_set_str(v.get_mpz_t(), std::string(t).c_str(), 10) != 0) {
            throw std::runtime_error("bad integer '" + std::string(t) + "'");
        }
        return v;
    };
    if (slash == std::string_view::npos) {
        return Rat(parse_z(s));
    }
    Int num = parse_z(s.substr(0, slash));
    Int den = parse_z(s.substr(slash + 1));
    if (sgn(den) <= 0) {
        throw std::runtime_error("denominator must be positive in '" + std::string(s) + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}
}  // namespace

RatPoly::RatPoly(const Rat& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
    }
}

RatPoly::RatPoly(long constant) : RatPoly(Rat(constant)) {}

RatPoly RatPoly::monomial(const Rat& c, std::size_t e) {
    RatPoly p;
    if (c != 0) {
        p.coeffs_.assign(e + 1, kZero);
        p.coeffs_[e] = c;
    }
    return p;
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> ascending) {
    RatPoly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

const Rat& RatPoly::coeff(std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : kZero;
}

const Rat& RatPoly::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) + b.coeff(i);
    }
    return RatPoly::from_coeffs(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) - b.coeff(i);
    }
    return RatPoly::from_coeffs(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return RatPoly{};
    }
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPoly::from_coeffs(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) {
        throw std::domain_error("divmod: division by the zero polynomial");
    }
    std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
    const int dg = g.degree();
    std::vector<Rat> quot;
    if (static_cast<int>(rem.size()) - 1 >= dg) {
        quot.assign(rem.size() - dg, Rat(0));
    }
    while (static_cast<int>(rem.size()) - 1 >= dg) {
        const std::size_t dr = rem.size() - 1;
        Rat c = rem.back() / g.leading();
        quot[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) {
            rem[dr - dg + i] -= c * g.coeff(i);
        }
        while (!rem.empty() && rem.back() == 0) {
            rem.pop_back();
        }
    }
    return {RatPoly::from_coeffs(std::move(quot)), RatPoly::from_coeffs(std::move(rem))};
}

std::string to_text(const RatPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int e = p.degree(); e >= 0; --e) {
        const Rat& c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) {
            continue;
        }
        const bool neg = sgn(c) < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string body;
        std::string cs = a.get_str();
        if (e == 0) {
            body = cs;
        } else {
            std::string xs = e == 1 ? "X" : "X^" + std::to_string(e);
            body = (a == 1) ? xs : cs + "*" + xs;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

RatPoly poly_from_text(std::string_view text) {
    // trim
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::runtime_error("empty polynomial");
    }
    if (text == "0") {
        return RatPoly{};
    }
    struct Term {
        bool neg;
        std::string_view body;
    };
    std::vector<Term> terms;
    bool neg = false;
    if (text.front() == '-') {
        neg = true;
        text.remove_prefix(1);
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i + 2 < text.size();) {
        if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
            terms.push_back({neg, text.substr(start, i - start)});
            neg = text[i + 1] == '-';
            i += 3;
            start = i;
        } else {
            ++i;
        }
    }
    terms.push_back({neg, text.substr(start)});

    std::vector<Rat> coeffs;
    auto add = [&](std::size_t e, const Rat& c) {
        if (coeffs.size() <= e) {
            coeffs.resize(e + 1, Rat(0));
        }
        coeffs[e] += c;
    };
    for (const auto& t : terms) {
        std::string_view b = t.body;
        if (b.empty()) {
            throw std::runtime_error("empty term in polynomial '" + std::string(text) + "'");
        }
        Rat c(1);
        std::size_t e = 0;
        const auto star = b.find('*');
        std::string_view xpart;
        if (star != std::string_view::npos) {
            c = parse_rat(b.substr(0, star));
            xpart = b.substr(star + 1);
        } else if (b.front() == 'X') {
            xpart = b;
        } else {
            c = parse_rat(b);
        }
        if (!xpart.empty()) {
            if (xpart == "X") {
                e = 1;
            } else if (xpart.size() > 2 && xpart[0] == 'X' && xpart[1] == '^') {
                e = std::stoul(std::string(xpart.substr(2)));
            } else {
                throw std::runtime_error("bad term '" + std::string(b) + "'");
            }
        }
        add(e, t.neg ? Rat(-c) : c);
    }
    return RatPoly::from_coeffs(std::move(coeffs));
}

}  // namespace creepers
