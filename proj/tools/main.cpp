// seaweed: command line front end for the seaweed library.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 not Frobenius, 4 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "seaweed/census.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/report.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/windup.hpp"

namespace sw = seaweed;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNotFrobenius = 3;
constexpr int kVerification = 4;

int exit_code_for(sw::ErrorCode code) {
    switch (code) {
        case sw::ErrorCode::InvalidArgument:
        case sw::ErrorCode::LengthMismatch:
        case sw::ErrorCode::UnionNotFull:
        case sw::ErrorCode::ParseError:
        case sw::ErrorCode::PreconditionViolated:
        case sw::ErrorCode::UnsupportedFormat: return kUsage;
        case sw::ErrorCode::NotFrobenius: return kNotFrobenius;
        default: return kVerification;
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SEAWEED_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw sw::Error(sw::ErrorCode::ParseError, std::string("SEAWEED_SEED is not an integer: ") + env);
        }
    }
    return 1;
}

sw::Family parse_family(const std::string& text) {
    if (text.size() != 1) throw sw::Error(sw::ErrorCode::ParseError, "family must be A, B or C");
    return sw::family_from_char(text[0]);
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

int cmd_check(const std::string& literal, bool json) {
    const auto s = sw::parse_seaweed_literal(literal);
    const auto w = sw::is_frobenius(sw::OrbitMeander(s));
    if (json) {
        std::cout << sw::to_json(s, w, 2) << '\n';
    } else {
        std::cout << sw::to_literal(s) << '\n';
        std::cout << "pi_union  {" << join(sw::pi_union(s)) << "}\n";
        for (const auto& o : w.orbits) std::cout << "orbit     {" << join(o.members) << "}  pi_union " << o.pi_union_count << '\n';
        std::cout << "frobenius " << (w.frobenius ? "true" : "false") << '\n';
    }
    return w.frobenius ? kOk : kNotFrobenius;
}

void print_table(const sw::SpectrumReport& r) {
    std::cout << sw::to_literal(r.seaweed) << '\n';
    std::cout << "alpha(F^)";
    for (int i = r.seaweed.rank(); i >= 1; --i) std::cout << "  a" << i << '=' << r.simple.at(i);
    std::cout << '\n';
    for (const auto& c : r.per_component) {
        std::cout << std::left << std::setw(7) << sw::to_string(c.component.side) << std::setw(14)
                  << ("{" + join(c.component.indices()) + "}") << sw::to_char(c.component.kind) << "  "
                  << c.multiset.to_string() << '\n';
    }
    std::ostringstream head, mult;
    head << "eigenvalue  ";
    mult << "multiplicity";
    for (const auto& [k, v] : r.total.counts()) {
        head << std::right << std::setw(5) << k;
        mult << std::right << std::setw(5) << v;
    }
    std::cout << head.str() << '\n' << mult.str() << '\n';
    std::cout << "symmetric " << (r.checks.symmetric ? "yes" : "no") << ", unbroken "
              << (r.checks.unbroken ? "yes" : "no") << '\n';
    for (const auto& f : r.flags) std::cout << "flag " << f << '\n';
}

int cmd_spectrum(const std::string& literal, bool json) {
    const auto report = sw::full_spectrum(sw::parse_seaweed_literal(literal));
    if (json) std::cout << sw::to_json(report, 2) << '\n';
    else print_table(report);
    return report.checks.symmetric && report.checks.unbroken ? kOk : kVerification;
}

int cmd_census(const sw::CensusOptions& opts, const std::string& out_path) {
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw sw::Error(sw::ErrorCode::InvalidArgument, "cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    const auto summary = sw::run_census(opts, [&](const sw::CensusRecord& r) { out << sw::to_json_line(r) << '\n'; });
    std::cerr << "pairs " << summary.pairs << ", frobenius " << summary.frobenius << ", oracle-checked "
              << summary.oracle_checked << ", violations " << summary.violations << '\n';
    for (const auto& line : summary.violation_report) std::cerr << "violation " << line << '\n';
    return summary.violations == 0 ? kOk : kVerification;
}

int cmd_windup(const std::string& family, int q, int steps, std::uint64_t seed) {
    const auto walk = sw::random_walk(q, parse_family(family), steps, seed);
    const auto s = sw::to_seaweed(walk.state);
    const bool frob = sw::is_frobenius(sw::OrbitMeander(s)).frobenius;
    std::cout << "moves " << sw::move_log_to_json(walk.log) << '\n';
    std::cout << "state " << sw::to_string(walk.state) << '\n';
    std::cout << "seaweed " << sw::to_literal(s) << '\n';
    std::cout << "frobenius " << (frob ? "true" : "false") << '\n';
    return frob ? kOk : kVerification;
}

int cmd_render(const std::string& literal, const std::string& format) {
    const auto fmt = sw::render_format_from_string(format);
    std::cout << sw::render(sw::OrbitMeander(sw::parse_seaweed_literal(literal)), fmt);
    return kOk;
}

int cmd_oracle(const std::string& literal, std::uint64_t seed) {
    const auto s = sw::parse_seaweed_literal(literal);
    const auto alg = sw::realize(s);
    const int ind = sw::index(alg, 5, seed);
    const bool frob = sw::is_frobenius(sw::OrbitMeander(s)).frobenius;
    std::cout << sw::to_literal(s) << '\n';
    std::cout << "dimension " << alg.dim() << ", oracle index " << ind << ", meander "
              << (frob ? "Frobenius" : "not Frobenius") << '\n';
    if ((ind == 0) != frob) {
        std::cout << "MISMATCH between oracle index and meander\n";
        return kVerification;
    }
    if (!frob) return kNotFrobenius;
    const auto oracle = sw::ad_spectrum(alg, sw::principal_element(alg, sw::sample_frobenius_functional(alg, seed)));
    const auto combinatorial = sw::full_spectrum(s).total;
    std::cout << "oracle        " << oracle.to_string() << '\n';
    std::cout << "combinatorial " << combinatorial.to_string() << '\n';
    if (oracle == combinatorial) {
        std::cout << "agree\n";
        return kOk;
    }
    std::set<long long> keys;
    for (const auto& [k, v] : oracle.counts()) keys.insert(k);
    for (const auto& [k, v] : combinatorial.counts()) keys.insert(k);
    for (long long k : keys)
        if (oracle.count(k) != combinatorial.count(k))
            std::cout << "differ at " << k << ": oracle " << oracle.count(k) << ", combinatorial "
                      << combinatorial.count(k) << '\n';
    return kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius seaweed algebras of types A, B and C: meanders, spectra and checks"};
    app.require_subcommand(1);

    std::string literal;
    bool json = false;
    bool table = false;

    auto* check = app.add_subcommand("check", "Decide Frobenius-ness from the orbit meander");
    check->add_option("seaweed", literal, "Seaweed literal, e.g. \"C8 top=8,7,6,3,2,1 bottom=8,7,5,4,3,2\"")->required();
    check->add_flag("--json", json, "Print JSON");

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum of a principal element");
    spectrum->add_option("seaweed", literal, "Seaweed literal")->required();
    auto* json_flag = spectrum->add_flag("--json", json, "Print JSON");
    spectrum->add_flag("--table", table, "Print a table (default)")->excludes(json_flag);

    sw::CensusOptions census_opts;
    std::string family;
    std::string out_path;
    std::optional<int> min_rank;
    std::optional<std::uint64_t> seed;
    auto* census = app.add_subcommand("census", "Check every subset pair of the given family up to max_rank");
    census->add_option("family", family, "A, B or C")->required();
    census->add_option("max_rank", census_opts.max_rank, "Largest rank")->required()->check(CLI::PositiveNumber);
    census->add_option("--min-rank", min_rank, "Smallest rank (default min(2, max_rank))")->check(CLI::PositiveNumber);
    census->add_option("--out", out_path, "JSONL output file (default stdout)");
    census->add_option("--oracle-max-rank", census_opts.oracle_max_rank, "Cross-check with the matrix oracle up to this rank");
    census->add_option("--jobs", census_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--seed", seed, "Seed for oracle functionals (default $SEAWEED_SEED or 1)");
    census->add_flag("--timing", census_opts.timing, "Record wall time per seaweed");

    int q = 1;
    int steps = 0;
    auto* windup = app.add_subcommand("windup", "Random walk of winding-up moves from the base M_q(1^q|)");
    windup->add_option("family", family, "A, B or C")->required();
    windup->add_option("q", q, "Base rank")->required()->check(CLI::PositiveNumber);
    windup->add_option("steps", steps, "Number of moves")->required()->check(CLI::NonNegativeNumber);
    windup->add_option("--seed", seed, "Walk seed (default $SEAWEED_SEED or 1)");

    std::string format = "ascii";
    auto* render = app.add_subcommand("render", "Draw the orbit meander");
    render->add_option("seaweed", literal, "Seaweed literal")->required();
    render->add_option("--format", format, "ascii or tikz");

    auto* oracle = app.add_subcommand("oracle", "Verify the combinatorial spectrum against the matrix realisation");
    oracle->add_option("seaweed", literal, "Seaweed literal")->required();
    oracle->add_option("--seed", seed, "Functional seed (default $SEAWEED_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(literal, json);
        if (*spectrum) return cmd_spectrum(literal, json);
        if (*census) {
            census_opts.family = parse_family(family);
            census_opts.min_rank = min_rank.value_or(std::min(2, census_opts.max_rank));
            census_opts.seed = resolve_seed(seed);
            return cmd_census(census_opts, out_path);
        }
        if (*windup) return cmd_windup(family, q, steps, resolve_seed(seed));
        if (*render) return cmd_render(literal, format);
        if (*oracle) return cmd_oracle(literal, resolve_seed(seed));
    } catch (const sw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}
