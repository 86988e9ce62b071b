// Command-line front end: continued fraction expansion of quadratic orders
// and function fields, discriminant family generation, table verification,
// and period scans.  Data rows go to stdout in the fixture TSV format;
// diagnostics go to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "creepers/families.hpp"
#include "creepers/ffexpand.hpp"
#include "creepers/fixture.hpp"
#include "creepers/numbers.hpp"
#include "creepers/ratpoly.hpp"
#include "creepers/surd.hpp"
#include "creepers/units.hpp"

namespace {

using namespace creepers;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDomain = 4;

std::vector<Int> parse_prime_list(const std::string& csv) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) {
            comma = csv.size();
        }
        std::string tok = csv.substr(start, comma - start);
        if (!tok.empty()) {
            out.emplace_back(tok);
        }
        start = comma + 1;
    }
    return out;
}

std::string factors_cell(const Int& q, const std::vector<Int>& primes) {
    if (q == 1) {
        return "";
    }
    FactorPattern fp = factor_pattern(q, primes);
    if (fp.cofactor != 1) {
        return "";  // the tables leave rows with foreign factors blank
    }
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
    return s;
}

void print_expansion(const Expansion& e, const std::string& id,
                     const std::vector<Int>& primes, bool with_regulator) {
    const bool with_factors = !primes.empty();
    std::cout << "#id=" << id << "\n#kind=integer\n#prefix="
              << (e.truncated ? "true" : "false") << "\n#columns=h,a,P,Q"
              << (with_factors ? ",factors" : "") << "\n";
    for (const auto& rec : e.records) {
        DisplayRow dr = display_row(e, rec);
        std::cout << dr.h << '\t' << dr.a.get_str() << '\t' << dr.p.get_str() << '\t'
                  << dr.q.get_str();
        if (with_factors) {
            std::cout << '\t' << factors_cell(dr.q, primes);
        }
        std::cout << '\n';
    }
    if (e.period) {
        std::cout << "## period=" << *e.period << "\n";
        if (with_regulator) {
            FundamentalUnit fu = fundamental_unit(e);
            std::cout << "## unit-norm=" << (fu.norm > 0 ? "+1" : "-1") << "\n";
            std::cout << "## regulator=" << regulator(e, 128).value.str(20) << "\n";
        }
    } else {
        std::cout << "## period=truncated\n";
    }
}

void print_poly_expansion(const PolyExpansion& e, const std::string& id) {
    std::cout << "#id=" << id << "\n#kind=polynomial\n#prefix="
              << (e.truncated ? "true" : "false") << "\n#columns=h,a,P,Q\n";
    for (const auto& rec : e.records) {
        std::cout << rec.h << '\t' << to_text(rec.a) << '\t' << to_text(rec.p) << '\t'
                  << to_text(rec.q) << '\n';
    }
    if (e.period) {
        std::cout << "## period=" << *e.period << "\n";
    } else {
        std::cout << "## period=truncated\n";
    }
    if (e.quasi_marker) {
        std::cout << "## quasi=" << e.quasi_marker->first << ":"
                  << e.quasi_marker->second.get_str() << "\n";
    }
}

int print_report(const VerifyReport& rep) {
    std::cout << "rows_checked=" << rep.rows_checked << "\n";
    std::cout << "cells_matched=" << rep.cells_matched << "\n";
    std::cout << "cells_skipped=" << rep.skipped_cells << "\n";
    for (const auto& m : rep.mismatches) {
        std::cout << "mismatch h=" << m.h << " column=" << m.column << " expected=" << m.expected
                  << " computed=" << m.computed << "\n";
    }
    switch (rep.status) {
        case VerifyReport::Status::exact:
            std::cout << "status=exact\n";
            return kExitOk;
        case VerifyReport::Status::prefix_exact:
            std::cout << "status=prefix-exact\n";
            return kExitOk;
        default:
            std::cout << "status=mismatch\n";
            return kExitMismatch;
    }
}

struct Args {
    std::string disc;
    std::string mode = "order";
    std::uint64_t max_steps = 1000000;
    std::string factors;
    std::string name;
    long n = 0;
    long div = 1;
    std::string poly;
    std::string fixture;
    long from = 0;
    long to = 0;
};

SeedMode seed_mode_of(const std::string& m) {
    if (m == "order") {
        return SeedMode::order;
    }
    if (m == "raw") {
        return SeedMode::raw;
    }
    throw CLI::ValidationError("--mode must be order or raw");
}

int run(int argc, char** argv) {
    CLI::App app{"continued fractions of quadratic orders and function fields"};
    app.require_subcommand(1);
    Args a;

    auto* cmd_expand = app.add_subcommand("expand", "expand sqrt of a discriminant");
    cmd_expand->add_option("--disc", a.disc, "discriminant D")->required();
    cmd_expand->add_option("--mode", a.mode, "order|raw (default order)");
    cmd_expand->add_option("--max-steps", a.max_steps, "row limit");
    cmd_expand->add_option("--factors", a.factors, "comma-separated primes for a factor column");

    auto* cmd_family = app.add_subcommand("family", "discriminant families");
    cmd_family->require_subcommand(1);
    auto* fam_list = cmd_family->add_subcommand("list", "print the registry");
    auto* fam_gen = cmd_family->add_subcommand("gen", "print D_n");
    fam_gen->add_option("--name", a.name, "family name")->required();
    fam_gen->add_option("--n", a.n, "parameter n")->required();
    fam_gen->add_option("--div", a.div, "square divisor f (expand D/f^2)");
    auto* fam_expand = cmd_family->add_subcommand("expand", "expand D_n with family factors");
    fam_expand->add_option("--name", a.name, "family name")->required();
    fam_expand->add_option("--n", a.n, "parameter n")->required();
    fam_expand->add_option("--div", a.div, "square divisor f");
    fam_expand->add_option("--max-steps", a.max_steps, "row limit");

    auto* cmd_ff = app.add_subcommand("ff-expand", "expand sqrt of a polynomial");
    cmd_ff->add_option("--poly", a.poly, "D(X) in canonical text")->required();
    cmd_ff->add_option("--max-steps", a.max_steps, "row limit");

    auto* cmd_verify = app.add_subcommand("verify", "replay a fixture and compare");
    cmd_verify->add_option("--fixture", a.fixture, "fixture file")->required();
    cmd_verify->add_option("--name", a.name, "family name");
    cmd_verify->add_option("--n", a.n, "parameter n");
    cmd_verify->add_option("--div", a.div, "square divisor f");
    cmd_verify->add_option("--disc", a.disc, "discriminant D");
    cmd_verify->add_option("--mode", a.mode, "order|raw for --disc");
    cmd_verify->add_option("--poly", a.poly, "polynomial D(X)");
    cmd_verify->add_option("--max-steps", a.max_steps, "row limit override");
    cmd_verify->add_option("--factors", a.factors, "primes for factor cells");

    auto* cmd_scan = app.add_subcommand("scan", "period of a family over an n range");
    cmd_scan->add_option("--name", a.name, "family name")->required();
    cmd_scan->add_option("--from", a.from, "first n")->required();
    cmd_scan->add_option("--to", a.to, "last n")->required();
    cmd_scan->add_option("--max-steps", a.max_steps, "row limit per n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_expand->parsed()) {
        Expansion e = expand(Int(a.disc), seed_mode_of(a.mode), a.max_steps);
        print_expansion(e, "disc-" + a.disc + "." + a.mode, parse_prime_list(a.factors), true);
        return kExitOk;
    }

    if (fam_list->parsed()) {
        for (const auto& f : registry()) {
            std::cout << f.name << "\tx=" << f.x.get_str() << "\tprimes=";
            for (std::size_t i = 0; i < f.primes.size(); ++i) {
                std::cout << (i ? "," : "") << f.primes[i].get_str();
            }
            if (f.n_constraint) {
                std::cout << "\tn=" << f.n_constraint->residue << " (mod "
                          << f.n_constraint->modulus << ")";
            }
            for (const Int& d : f.square_divisors) {
                if (d != 1) {
                    std::cout << "\tdiv=" << d.get_str();
                }
            }
            std::cout << "\n";
        }
        return kExitOk;
    }

    if (fam_gen->parsed()) {
        const FamilySpec& f = find_family(a.name);
        std::cout << discriminant(f, a.n, a.div).get_str() << "\n";
        return kExitOk;
    }

    if (fam_expand->parsed()) {
        const FamilySpec& f = find_family(a.name);
        Int d = discriminant(f, a.n, a.div);
        Expansion e = expand(d, SeedMode::order, a.max_steps);
        std::string id = f.name + ".n" + std::to_string(a.n);
        if (a.div != 1) {
            id = f.name + "-div" + std::to_string(a.div) + ".n" + std::to_string(a.n);
        }
        print_expansion(e, id, f.primes, true);
        return kExitOk;
    }

    if (cmd_ff->parsed()) {
        PolyExpansion e = ff_expand(poly_from_text(a.poly), a.max_steps);
        print_poly_expansion(e, "ff");
        return kExitOk;
    }

    if (cmd_scan->parsed()) {
        const FamilySpec& f = find_family(a.name);
        for (const ScanRow& row : scan_periods(f, a.from, a.to, a.max_steps)) {
            std::cout << row.n << '\t';
            if (!row.error.empty()) {
                std::cout << "error: " << row.error << '\n';
                continue;
            }
            if (row.period) {
                std::cout << *row.period;
            } else {
                std::cout << "truncated";
            }
            std::cout << '\t' << row.pure_pattern_rows << '\n';
        }
        return kExitOk;
    }

    if (!cmd_verify->parsed()) {
        std::cerr << app.help();
        return kExitUsage;
    }
    FixtureTable fixture = parse_fixture_file(a.fixture);
    std::vector<Int> primes = parse_prime_list(a.factors);
    const bool has_family = !a.name.empty();
    const bool has_disc = !a.disc.empty();
    const bool has_poly = !a.poly.empty();
    if (has_family + has_disc + has_poly != 1) {
        std::cerr << "verify needs exactly one of --name/--n, --disc, --poly\n";
        return kExitUsage;
    }
    std::uint64_t steps = a.max_steps;
    if (!cmd_verify->count("--max-steps") && fixture.prefix_only && !fixture.rows.empty()) {
        steps = fixture.rows.back().h + 1;  // reproduce the prefix without closure
    }
    VerifyReport rep;
    if (has_poly) {
        rep = verify(ff_expand(poly_from_text(a.poly), steps), fixture);
    } else if (has_family) {
        const FamilySpec& f = find_family(a.name);
        if (primes.empty()) {
            primes = f.primes;
        }
        Expansion e = expand(discriminant(f, a.n, a.div), SeedMode::order, steps);
        rep = verify(e, fixture, primes);
    } else {
        Expansion e = expand(Int(a.disc), seed_mode_of(a.mode), steps);
        rep = verify(e, fixture, primes);
    }
    std::cout << "id=" << fixture.id << "\n";
    return print_report(rep);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
