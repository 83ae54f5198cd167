#include "seaweed/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "seaweed/errors.hpp"

namespace seaweed {

long long SimpleEigenvalues::at(int index) const {
    const Rational& v = values.at(static_cast<std::size_t>(index - 1));
    if (v.get_den() != 1) throw Error(ErrorCode::NonIntegerSolution, "simple eigenvalue is not an integer");
    return v.get_num().get_si();
}

std::vector<long long> SimpleEigenvalues::as_integers() const {
    std::vector<long long> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back(at(static_cast<int>(i) + 1));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_low_rank_substitute(const Component& c) {
    return (c.kind == Family::B && c.size() <= 2) || (c.kind == Family::C && c.size() == 1);
}

// Right-hand side of the table row for index i inside a B/C component of size m.
int table_value(Family kind, int m, int i) {
    if (m == 1) return 1;  // B1 and C1 follow the type-A fixed-point rule
    // B2 takes the even row with k = 1 (x2 = 1, x1 = 0); the matrix oracle agrees.
    if (kind == Family::C) return i == 1 ? 1 : 0;
    if (m % 2 == 1) return i % 2 == 1 ? 1 : -1;               // (-1)^(i-1)
    if (i == 1) return 0;
    return i % 2 == 0 ? 1 : -1;                               // (-1)^i
}

}  // namespace

std::vector<LinearConstraint> constraint_system(const OrbitMeander& m) {
    using K = LinearConstraint::Kind;
    using P = LinearConstraint::Provenance;
    std::vector<LinearConstraint> out;
    for (const auto* comps : {&m.top_components(), &m.bottom_components()}) {
        for (const auto& c : *comps) {
            for (int i = c.hi; i >= c.lo; --i) {
                if (c.kind != Family::A) {
                    out.push_back({K::Fixed, i, 0, table_value(c.kind, c.size(), i), c.side, P::TableRow});
                    continue;
                }
                const int j = m.involution(c.side, i);
                if (j == i) {
                    out.push_back({K::Fixed, i, 0, 1, c.side, P::TableRow});
                } else if (j < i) {
                    out.push_back({K::PairSum, i, j, i - j == 1 ? 1 : 0, c.side, P::OrbitRelation});
                }
            }
        }
    }
    return out;
}

SimpleEigenvalues solve_simple_eigenvalues(const OrbitMeander& m) {
    const auto witness = is_frobenius(m);
    if (!witness.frobenius) throw Error(ErrorCode::NotFrobenius, to_literal(m.seaweed()) + " is not Frobenius");

    const int n = m.rank();
    SparseLinearSystem system(n);
    const auto constraints = constraint_system(m);
    for (const auto& c : constraints) {
        const Rational s = sign_of(c.side);
        std::vector<SparseLinearSystem::Term> terms{{c.i - 1, s}};
        if (c.kind == LinearConstraint::Kind::PairSum) terms.push_back({c.j - 1, s});
        system.add_row(std::move(terms), Rational(c.value));
    }
    const auto sol = system.solve();

    auto orbit_of = [&](int index) {
        for (const auto& o : witness.orbits)
            if (std::find(o.members.begin(), o.members.end(), index) != o.members.end()) {
                std::string list;
                for (int v : o.members) list += (list.empty() ? "" : ",") + std::to_string(v);
                return "{" + list + "}";
            }
        return std::string("{}");
    };
    switch (sol.status) {
        case SparseLinearSystem::Status::Underdetermined:
            throw Error(ErrorCode::Underdetermined, "alpha_" + std::to_string(sol.free_vars.front() + 1) +
                                                        " is unconstrained (orbit " +
                                                        orbit_of(sol.free_vars.front() + 1) + ") in " +
                                                        to_literal(m.seaweed()));
        case SparseLinearSystem::Status::Inconsistent: {
            const auto& bad = constraints[*sol.bad_row];
            throw Error(ErrorCode::Inconsistent, "constraint on alpha_" + std::to_string(bad.i) + " (orbit " +
                                                     orbit_of(bad.i) + ") contradicts the rest of the system in " +
                                                     to_literal(m.seaweed()));
        }
        case SparseLinearSystem::Status::Unique: break;
    }
    SimpleEigenvalues out{sol.values, true};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        if (out.values[i].get_den() != 1) {
            throw Error(ErrorCode::NonIntegerSolution, "alpha_" + std::to_string(i + 1) + "(F^) = " +
                                                           out.values[i].get_str() + " in " + to_literal(m.seaweed()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

EigenvalueMultiset::EigenvalueMultiset(std::map<long long, long long> counts) {
    for (const auto& [k, v] : counts) add(k, v);
}

void EigenvalueMultiset::add(long long eigenvalue, long long multiplicity) {
    if (multiplicity <= 0) return;
    counts_[eigenvalue] += multiplicity;
}

void EigenvalueMultiset::merge(const EigenvalueMultiset& other) {
    for (const auto& [k, v] : other.counts_) add(k, v);
}

long long EigenvalueMultiset::count(long long eigenvalue) const {
    auto it = counts_.find(eigenvalue);
    return it == counts_.end() ? 0 : it->second;
}

long long EigenvalueMultiset::total() const noexcept {
    long long t = 0;
    for (const auto& [k, v] : counts_) t += v;
    return t;
}

std::string EigenvalueMultiset::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [k, v] : counts_) {
        if (!first) out << ", ";
        out << k << ':' << v;
        first = false;
    }
    out << '}';
    return out.str();
}

EigenvalueMultiset component_spectrum(const Component& c, const SimpleEigenvalues& simple, const RootSystemSpec& spec) {
    if (c.lo < 1 || c.hi > spec.rank() || static_cast<int>(simple.values.size()) != spec.rank())
        throw Error(ErrorCode::LengthMismatch, "component or eigenvalues do not match the root system");
    const int k = c.size();
    const long long s = sign_of(c.side);
    // prefix[t] = sum of alpha over the first t indices of the component (ascending).
    std::vector<long long> prefix(static_cast<std::size_t>(k + 1), 0);
    for (int t = 1; t <= k; ++t) prefix[static_cast<std::size_t>(t)] = prefix[static_cast<std::size_t>(t - 1)] + simple.at(c.lo + t - 1);
    auto P = [&](int t) { return prefix[static_cast<std::size_t>(t)]; };

    EigenvalueMultiset ms;
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= j; ++i) ms.add(s * (P(j) - P(i - 1)));

    if (c.kind == Family::C) {
        // a_j + ... + a_{i+1} + 2(a_i + ... + a_2) + a_1,  k >= j >= i >= 2
        for (int j = 2; j <= k; ++j)
            for (int i = 2; i <= j; ++i) ms.add(s * ((P(j) - P(i)) + 2 * (P(i) - P(1)) + P(1)));
    } else if (c.kind == Family::B) {
        // a_j + ... + a_{i+1} + 2(a_i + ... + a_1),  k >= j > i >= 1
        for (int j = 2; j <= k; ++j)
            for (int i = 1; i < j; ++i) ms.add(s * ((P(j) - P(i)) + 2 * P(i)));
    }
    ms.add(0, c.kind == Family::A ? (k + 1) / 2 : k);
    return ms;
}

bool check_symmetry(const EigenvalueMultiset& ms) {
    if (ms.empty()) return true;
    const long long lo = ms.counts().begin()->first;
    const long long hi = ms.counts().rbegin()->first;
    const long long reach = std::max(std::abs(lo), std::abs(hi));
    for (long long i = 0; i <= reach; ++i)
        if (ms.count(-i) != ms.count(i + 1)) return false;
    return true;
}

bool check_unbroken(const EigenvalueMultiset& ms) {
    if (ms.empty()) throw Error(ErrorCode::EmptyMultiset, "unbroken check needs a nonempty multiset");
    long long expected = ms.counts().begin()->first;
    for (const auto& [k, v] : ms.counts()) {
        if (k != expected) return false;
        ++expected;
    }
    return true;
}

bool component_sum_check(const Component& c, const SimpleEigenvalues& simple) {
    Rational sum = 0;
    for (int i = c.lo; i <= c.hi; ++i) sum += simple.values.at(static_cast<std::size_t>(i - 1));
    return sign_of(c.side) * sum == 1;
}

std::optional<Root> symmetric_root(const Root& root, const Component& c) {
    if (c.kind != Family::A) throw Error(ErrorCode::InvalidArgument, "symmetric roots are defined for type-A components");
    const auto supp = support(root);
    if (supp.empty() || supp.front() < c.lo || supp.back() > c.hi)
        throw Error(ErrorCode::InvalidArgument, "root " + root.to_string() + " is not supported inside the component");
    for (int idx : supp)
        if (root.coeffs[static_cast<std::size_t>(idx - 1)] != 1 || idx - supp.front() >= static_cast<int>(supp.size()))
            throw Error(ErrorCode::InvalidArgument, "root " + root.to_string() + " is not a type-A root");

    // Renumber the component as alpha_k ... alpha_1 (alpha_1 = lowest index).
    const int k = c.size();
    const int i = supp.front() - c.lo + 1;
    const int j = supp.back() - c.lo + 1;
    if (i + j == k + 1) return std::nullopt;
    // The root and its partner tile a centred interval [k+1-r, r].
    const auto [from, to] = i + j > k + 1 ? std::pair{k + 1 - j, i - 1} : std::pair{j + 1, k + 1 - i};
    Root partner{std::vector<int>(root.coeffs.size(), 0), root.sign};
    for (int t = from; t <= to; ++t) partner.coeffs[static_cast<std::size_t>(c.lo + t - 2)] = 1;
    return partner;
}

bool value_allowed_for_kind(Family kind, long long value) noexcept {
    switch (kind) {
        case Family::A: return value >= -2 && value <= 3;
        case Family::B: return value >= -1 && value <= 1;
        case Family::C: return value == 0 || value == 1;
    }
    return false;
}

SpectrumReport full_spectrum(const Seaweed& s) {
    const OrbitMeander m(s);
    SpectrumReport report{s, solve_simple_eigenvalues(m), {}, {}, {}, {}};
    bool symmetric = true;
    bool unbroken = true;
    for (const auto& c : all_components(s)) {
        auto ms = component_spectrum(c, report.simple, s.spec());
        symmetric = symmetric && check_symmetry(ms);
        unbroken = unbroken && check_unbroken(ms);
        report.total.merge(ms);
        report.per_component.push_back({c, std::move(ms)});
        if (is_low_rank_substitute(c)) {
            report.flags.push_back("low-rank-row:" + std::string(1, to_char(c.kind)) + std::to_string(c.size()) +
                                   "@" + std::string(to_string(c.side)));
        }
    }
    report.checks.symmetric = symmetric && check_symmetry(report.total);
    report.checks.unbroken = unbroken && check_unbroken(report.total);
    return report;
}

}  // namespace seaweed
