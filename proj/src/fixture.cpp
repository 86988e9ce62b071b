#include "creepers/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "creepers/families.hpp"

namespace creepers {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("fixture parse error at line " + std::to_string(line) + ": " + what);
}

Int parse_int(std::string_view s, std::size_t line) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0) {
        parse_fail(line, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

const std::vector<std::string> kKnownColumns = {"h", "a", "P", "Q", "factors"};

}  // namespace

std::vector<FactorToken> parse_factor_expr(std::string_view expr, const std::optional<Int>& x) {
    std::vector<FactorToken> out;
    for (const std::string& tok : split(expr, '*')) {
        std::string base = tok;
        unsigned long e = 1;
        if (const auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            const std::string es = tok.substr(caret + 1);
            if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos) {
                throw std::runtime_error("bad exponent in factor '" + tok + "'");
            }
            e = std::stoul(es);
        }
        Int b;
        if (base == "x") {
            if (!x) {
                throw std::runtime_error("factor uses 'x' but the fixture declares no #x");
            }
            b = *x;
        } else {
            if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos) {
                throw std::runtime_error("bad factor base '" + base + "'");
            }
            b = Int(base);
        }
        if (b < 2) {
            throw std::runtime_error("factor base must be >= 2 in '" + std::string(expr) + "'");
        }
        out.push_back({b, e});
    }
    return out;
}

FixtureTable parse_fixture(std::string_view text) {
    FixtureTable f;
    bool saw_id = false, saw_kind = false, saw_prefix = false;
    std::size_t lineno = 0;
    std::optional<std::uint64_t> prev_h;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.rfind("##", 0) == 0) {
            continue;  // comment
        }
        if (line.rfind("#", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                parse_fail(lineno, "header without '='");
            }
            const std::string key = line.substr(1, eq - 1);
            const std::string val = line.substr(eq + 1);
            if (key == "id") {
                f.id = val;
                saw_id = true;
            } else if (key == "kind") {
                if (val == "integer") {
                    f.kind = FixtureKind::integer;
                } else if (val == "polynomial") {
                    f.kind = FixtureKind::polynomial;
                } else {
                    parse_fail(lineno, "kind must be integer or polynomial");
                }
                saw_kind = true;
            } else if (key == "x") {
                f.x = parse_int(val, lineno);
            } else if (key == "prefix") {
                if (val == "true") {
                    f.prefix_only = true;
                } else if (val == "false") {
                    f.prefix_only = false;
                } else {
                    parse_fail(lineno, "prefix must be true or false");
                }
                saw_prefix = true;
            } else if (key == "columns") {
                f.columns = split(val, ',');
                for (const auto& c : f.columns) {
                    if (std::find(kKnownColumns.begin(), kKnownColumns.end(), c) ==
                        kKnownColumns.end()) {
                        parse_fail(lineno, "unknown column '" + c + "'");
                    }
                }
                if (f.columns.empty() || f.columns[0] != "h") {
                    parse_fail(lineno, "first column must be h");
                }
            } else {
                parse_fail(lineno, "unknown header '" + key + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        // data row
        if (f.columns.empty()) {
            parse_fail(lineno, "data row before #columns header");
        }
        const std::vector<std::string> cells = split(line, '\t');
        if (cells.size() > f.columns.size()) {
            parse_fail(lineno, "row has more cells than declared columns");
        }
        FixtureRow row;
        bool any_value = false;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string& col = f.columns[i];
            const std::string& cell = cells[i];
            if (cell.empty()) {
                continue;
            }
            try {
                if (col == "h") {
                    Int h = parse_int(cell, lineno);
                    if (sgn(h) < 0 || !h.fits_ulong_p()) {
                        parse_fail(lineno, "bad step index");
                    }
                    row.h = h.get_ui();
                } else if (col == "factors") {
                    parse_factor_expr(cell, f.x);  // validate now
                    row.factors = cell;
                    any_value = true;
                } else if (f.kind == FixtureKind::integer) {
                    Int v = parse_int(cell, lineno);
                    (col == "a" ? row.a_int : col == "P" ? row.p_int : row.q_int) = std::move(v);
                    any_value = true;
                } else {
                    RatPoly v = poly_from_text(cell);
                    (col == "a" ? row.a_poly : col == "P" ? row.p_poly : row.q_poly) = std::move(v);
                    any_value = true;
                }
            } catch (const std::runtime_error& ex) {
                parse_fail(lineno, ex.what());
            }
        }
        if (!any_value) {
            parse_fail(lineno, "row carries none of a, P, Q, factors");
        }
        if (prev_h) {
            if (row.h <= *prev_h) {
                parse_fail(lineno, "step index not strictly increasing");
            }
        } else if (row.h != 0) {
            parse_fail(lineno, "first row must have h = 0");
        }
        prev_h = row.h;
        f.rows.push_back(std::move(row));
    }
    if (!saw_id || !saw_kind || !saw_prefix || f.columns.empty()) {
        throw std::runtime_error("fixture missing required headers (#id, #kind, #prefix, #columns)");
    }
    return f;
}

FixtureTable parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open fixture file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

std::string serialize_fixture(const FixtureTable& f) {
    std::ostringstream out;
    out << "#id=" << f.id << "\n";
    out << "#kind=" << (f.kind == FixtureKind::integer ? "integer" : "polynomial") << "\n";
    if (f.x) {
        out << "#x=" << f.x->get_str() << "\n";
    }
    out << "#prefix=" << (f.prefix_only ? "true" : "false") << "\n";
    out << "#columns=";
    for (std::size_t i = 0; i < f.columns.size(); ++i) {
        out << (i ? "," : "") << f.columns[i];
    }
    out << "\n";
    for (const FixtureRow& row : f.rows) {
        bool first = true;
        for (const std::string& col : f.columns) {
            if (!first) {
                out << '\t';
            }
            first = false;
            if (col == "h") {
                out << row.h;
            } else if (col == "factors") {
                if (row.factors) {
                    out << *row.factors;
                }
            } else if (f.kind == FixtureKind::integer) {
                const auto& v = col == "a" ? row.a_int : col == "P" ? row.p_int : row.q_int;
                if (v) {
                    out << v->get_str();
                }
            } else {
                const auto& v = col == "a" ? row.a_poly : col == "P" ? row.p_poly : row.q_poly;
                if (v) {
                    out << to_text(*v);
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

bool has_column(const FixtureTable& f, const std::string& name) {
    return std::find(f.columns.begin(), f.columns.end(), name) != f.columns.end();
}

struct CellCounter {
    VerifyReport& rep;
    std::uint64_t h;

    void match(bool ok, const std::string& col, const std::string& expected,
               const std::string& computed) {
        if (ok) {
            ++rep.cells_matched;
        } else {
            rep.mismatches.push_back({h, col, expected, computed});
        }
    }
};

void finish(VerifyReport& rep, bool prefix_only) {
    rep.status = !rep.mismatches.empty() ? VerifyReport::Status::mismatch
                 : prefix_only           ? VerifyReport::Status::prefix_exact
                                         : VerifyReport::Status::exact;
}

std::string fmt_pattern(const FactorPattern& fp) {
    std::string s;
    for (const auto& [p, e] : fp.exponents) {
        if (!s.empty()) {
            s += "*";
        }
        s += p.get_str();
        if (e > 1) {
            s += "^" + std::to_string(e);
        }
    }
    if (fp.cofactor != 1 || s.empty()) {
        if (!s.empty()) {
            s += "*";
        }
        s += fp.cofactor.get_str();
    }
    return s;
}

/// Factor cells must reproduce factor_pattern exactly: the prime exponents
/// and the residual cofactor both match.
void check_factor_cell(CellCounter& cc, const std::string& cell, const Int& q,
                       std::span<const Int> primes, const std::optional<Int>& x) {
    std::vector<FactorToken> toks = parse_factor_expr(cell, x);
    FactorPattern want;
    want.cofactor = 1;
    for (const auto& t : toks) {
        if (std::find(primes.begin(), primes.end(), t.base) != primes.end()) {
            want.exponents[t.base] += t.exp;
        } else {
            want.cofactor *= pow_int(t.base, t.exp);
        }
    }
    FactorPattern got = factor_pattern(q, primes);
    cc.match(want.exponents == got.exponents && want.cofactor == got.cofactor, "factors", cell,
             fmt_pattern(got));
}

}  // namespace

VerifyReport verify(const Expansion& computed, const FixtureTable& fixture,
                    std::span<const Int> primes) {
    if (fixture.kind != FixtureKind::integer) {
        throw std::invalid_argument("verify: integer expansion against a polynomial fixture");
    }
    VerifyReport rep;
    for (const FixtureRow& row : fixture.rows) {
        ++rep.rows_checked;
        if (has_column(fixture, "a") && !row.a_int) {
            ++rep.skipped_cells;
        }
        if (has_column(fixture, "P") && !row.p_int) {
            ++rep.skipped_cells;
        }
        if (has_column(fixture, "Q") && !row.q_int) {
            ++rep.skipped_cells;
        }
        if (has_column(fixture, "factors") && !row.factors) {
            ++rep.skipped_cells;
        }
        if (row.h >= computed.records.size()) {
            rep.mismatches.push_back({row.h, "row", "present", "missing (expansion ended)"});
            continue;
        }
        DisplayRow dr = display_row(computed, computed.records[row.h]);
        CellCounter cc{rep, row.h};
        if (row.a_int) {
            cc.match(*row.a_int == dr.a, "a", row.a_int->get_str(), dr.a.get_str());
        }
        if (row.p_int) {
            cc.match(*row.p_int == dr.p, "P", row.p_int->get_str(), dr.p.get_str());
        }
        if (row.q_int) {
            cc.match(*row.q_int == dr.q, "Q", row.q_int->get_str(), dr.q.get_str());
        }
        if (row.factors) {
            check_factor_cell(cc, *row.factors, dr.q, primes, fixture.x);
        }
    }
    if (!fixture.prefix_only && !fixture.rows.empty()) {
        const std::uint64_t last_h = fixture.rows.back().h;
        const std::string want = std::to_string(last_h);
        if (!computed.period) {
            rep.mismatches.push_back({last_h, "period", want, "none (truncated)"});
        } else if (*computed.period != last_h) {
            rep.mismatches.push_back({last_h, "period", want, std::to_string(*computed.period)});
        }
    }
    finish(rep, fixture.prefix_only);
    return rep;
}

VerifyReport verify(const PolyExpansion& computed, const FixtureTable& fixture) {
    if (fixture.kind != FixtureKind::polynomial) {
        throw std::invalid_argument("verify: polynomial expansion against an integer fixture");
    }
    VerifyReport rep;
    for (const FixtureRow& row : fixture.rows) {
        ++rep.rows_checked;
        for (const char* col : {"a", "P", "Q"}) {
            const auto& v = col[0] == 'a' ? row.a_poly : col[0] == 'P' ? row.p_poly : row.q_poly;
            if (has_column(fixture, col) && !v) {
                ++rep.skipped_cells;
            }
        }
        if (row.h >= computed.records.size()) {
            rep.mismatches.push_back({row.h, "row", "present", "missing (expansion ended)"});
            continue;
        }
        const PolyRecord& rec = computed.records[row.h];
        CellCounter cc{rep, row.h};
        if (row.a_poly) {
            cc.match(*row.a_poly == rec.a, "a", to_text(*row.a_poly), to_text(rec.a));
        }
        if (row.p_poly) {
            cc.match(*row.p_poly == rec.p, "P", to_text(*row.p_poly), to_text(rec.p));
        }
        if (row.q_poly) {
            cc.match(*row.q_poly == rec.q, "Q", to_text(*row.q_poly), to_text(rec.q));
        }
    }
    if (!fixture.prefix_only && !fixture.rows.empty()) {
        const std::uint64_t last_h = fixture.rows.back().h;
        const std::string want = std::to_string(last_h);
        if (!computed.period) {
            rep.mismatches.push_back({last_h, "period", want, "none (truncated)"});
        } else if (*computed.period != last_h) {
            rep.mismatches.push_back({last_h, "period", want, std::to_string(*computed.period)});
        }
    }
    finish(rep, fixture.prefix_only);
    return rep;
}

}  // namespace creepers
