#include "seaweed/census.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "seaweed/errors.hpp"
#include "seaweed/oracle.hpp"

namespace seaweed {

std::uint64_t census_size(int rank) {
    std::uint64_t n = 1;
    for (int i = 0; i < rank; ++i) n *= 3;
    return n;
}

Seaweed census_seaweed(Family family, int rank, std::uint64_t i) {
    std::vector<int> pi1, pi2;
    for (int k = 1; k <= rank; ++k, i /= 3) {
        const auto digit = i % 3;
        if (digit != 1) pi1.push_back(k);
        if (digit != 0) pi2.push_back(k);
    }
    return Seaweed::from_subsets(RootSystemSpec(family, rank), pi1, pi2);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool symmetric_roots_hold(const Component& c, const SimpleEigenvalues& simple, const RootSystemSpec& spec) {
    const bool negative = c.side == Side::Bottom;
    for (int lo = c.lo; lo <= c.hi; ++lo)
        for (int hi = lo; hi <= c.hi; ++hi) {
            Root r{std::vector<int>(static_cast<std::size_t>(spec.rank()), 0), RootSign::Positive};
            for (int t = lo; t <= hi; ++t) r.coeffs[static_cast<std::size_t>(t - 1)] = 1;
            if (negative) r = r.negated();
            const auto partner = symmetric_root(r, c);
            if (partner && evaluate(r, simple.values) + evaluate(*partner, simple.values) != 1) return false;
        }
    return true;
}

}  // namespace

CensusRecord evaluate(const Seaweed& s, bool with_oracle, std::uint64_t seed) {
    CensusRecord rec;
    rec.literal = to_literal(s);
    rec.family = to_char(s.spec().family());
    rec.rank = s.rank();
    rec.pi1 = s.top();
    rec.pi2 = s.bottom();
    const auto [a, b] = to_compositions(s);
    rec.a = a.parts;
    rec.b = b.parts;

    const OrbitMeander m(s);
    const auto witness = is_frobenius(m);
    rec.frobenius = witness.frobenius;
    rec.orbits = witness.orbits;

    std::optional<MatrixAlgebra> alg;
    if (with_oracle) {
        alg = realize(s);
        const bool index_zero = index(*alg, 5, seed) == 0;
        rec.checks["oracle_index"] = index_zero == witness.frobenius;
    }
    if (!witness.frobenius) return rec;

    try {
        const SpectrumReport report = full_spectrum(s);
        rec.simple_eigenvalues = report.simple.as_integers();
        rec.spectrum = report.total.counts();
        rec.flags = report.flags;
        rec.checks["symmetric"] = report.checks.symmetric;
        rec.checks["unbroken"] = report.checks.unbroken;

        bool bound = true;
        for (long long v : *rec.simple_eigenvalues) bound = bound && v >= -3 && v <= 3;
        rec.checks["simple_bound"] = bound;

        bool table = true, sums = true, partners = true;
        long long padding = 0;
        for (const auto& c : all_components(s)) {
            padding += c.kind == Family::A ? (c.size() + 1) / 2 : c.size();
            for (int i = c.lo; i <= c.hi; ++i) table = table && value_allowed_for_kind(c.kind, sign_of(c.side) * report.simple.at(i));
            if (c.kind == Family::A) {
                sums = sums && component_sum_check(c, report.simple);
                partners = partners && symmetric_roots_hold(c, report.simple, s.spec());
            }
        }
        // The per-kind value table is a statement about B/C seaweeds; pure
        // type-A seaweeds reach -3 (e.g. A6 top=6,5,4,3,2,1 bottom=6,4,3,2,1).
        if (s.spec().family() != Family::A) rec.checks["table_values"] = table;
        rec.checks["zero_padding"] = padding == s.rank();
        rec.checks["dimension"] = report.total.total() == dimension(s);
        rec.checks["component_sum"] = sums;
        rec.checks["symmetric_root"] = partners;

        if (alg) {
            const auto f = sample_frobenius_functional(*alg, splitmix(seed));
            rec.checks["oracle_spectrum"] = ad_spectrum(*alg, principal_element(*alg, f)) == report.total;
        }
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

CensusSummary run_census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink) {
    if (opts.max_rank < 1 || opts.min_rank < 1 || opts.min_rank > opts.max_rank)
        throw Error(ErrorCode::InvalidArgument, "census needs 1 <= min_rank <= max_rank");
    CensusSummary summary;
    const unsigned jobs = std::max(1u, opts.jobs);
    for (int rank = opts.min_rank; rank <= opts.max_rank; ++rank) {
        const std::uint64_t total = census_size(rank);
        const bool oracle = rank <= opts.oracle_max_rank;
        std::vector<CensusRecord> records(total);
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t i = next++; i < total; i = next++) {
                const auto start = std::chrono::steady_clock::now();
                const std::uint64_t seed = splitmix(opts.seed ^ (static_cast<std::uint64_t>(rank) << 40) ^ i);
                const Seaweed s = census_seaweed(opts.family, rank, i);
                try {
                    records[i] = evaluate(s, oracle, seed);
                } catch (const Error& e) {
                    records[i].literal = to_literal(s);
                    records[i].family = to_char(opts.family);
                    records[i].rank = rank;
                    records[i].error = e.what();
                }
                if (opts.timing)
                    records[i].seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        for (const auto& rec : records) {
            ++summary.pairs;
            if (rec.frobenius) ++summary.frobenius;
            if (rec.checks.count("oracle_index")) ++summary.oracle_checked;
            if (!rec.passed()) {
                ++summary.violations;
                std::string line = rec.literal + ":";
                for (const auto& [name, ok] : rec.checks)
                    if (!ok) line += " " + name;
                if (rec.error) line += " error: " + *rec.error;
                summary.violation_report.push_back(line);
            }
            sink(rec);
        }
    }
    return summary;
}

}  // namespace seaweed
