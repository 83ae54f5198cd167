#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/spectrum.hpp"

using namespace seaweed;

namespace {

const char* kRunning = "C8 top=8,7,6,3,2,1 bottom=8,7,5,4,3,2";

using Counts = std::map<long long, long long>;

// Evaluates every root of the component directly, without prefix sums.
EigenvalueMultiset generic_component_spectrum(const Component& c, const SimpleEigenvalues& simple,
                                              const RootSystemSpec& spec) {
    EigenvalueMultiset ms;
    for (const auto& r : positive_roots(spec)) {
        const auto supp = support(r);
        if (supp.front() < c.lo || supp.back() > c.hi) continue;
        const Root signed_root = c.side == Side::Top ? r : r.negated();
        const Rational v = evaluate(signed_root, simple.values);
        REQUIRE(v.get_den() == 1);
        ms.add(v.get_num().get_si());
    }
    ms.add(0, c.kind == Family::A ? (c.size() + 1) / 2 : c.size());
    return ms;
}

Root interval(int n, int lo, int hi) {
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0), RootSign::Positive};
    for (int i = lo; i <= hi; ++i) r.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    return r;
}

}  // namespace

TEST_CASE("constraint system of the running example") {
    const OrbitMeander m(parse_seaweed_literal(kRunning));
    using K = LinearConstraint::Kind;
    using P = LinearConstraint::Provenance;
    const std::vector<LinearConstraint> expect{
        {K::PairSum, 8, 6, 0, Side::Top, P::OrbitRelation},    {K::Fixed, 7, 0, 1, Side::Top, P::TableRow},
        {K::Fixed, 3, 0, 0, Side::Top, P::TableRow},           {K::Fixed, 2, 0, 0, Side::Top, P::TableRow},
        {K::Fixed, 1, 0, 1, Side::Top, P::TableRow},           {K::PairSum, 8, 7, 1, Side::Bottom, P::OrbitRelation},
        {K::PairSum, 5, 2, 0, Side::Bottom, P::OrbitRelation}, {K::PairSum, 4, 3, 1, Side::Bottom, P::OrbitRelation},
    };
    CHECK(constraint_system(m) == expect);
}

TEST_CASE("simple eigenvalues of the running example") {
    const OrbitMeander m(parse_seaweed_literal(kRunning));
    const auto simple = solve_simple_eigenvalues(m);
    CHECK(simple.as_integers() == std::vector<long long>{1, 0, 0, -1, 0, 2, 1, -2});
}

TEST_CASE("component and total spectra of the running example") {
    const auto report = full_spectrum(parse_seaweed_literal(kRunning));
    REQUIRE(report.per_component.size() == 4);
    CHECK(report.per_component[0].multiset.counts() == Counts{{-2, 1}, {-1, 1}, {0, 2}, {1, 2}, {2, 1}, {3, 1}});
    CHECK(report.per_component[1].multiset.counts() == Counts{{0, 6}, {1, 6}});
    CHECK(report.per_component[2].multiset.counts() == Counts{{-1, 1}, {0, 1}, {1, 1}, {2, 1}});
    CHECK(report.per_component[3].multiset.counts() == Counts{{0, 6}, {1, 6}});
    CHECK(report.total.counts() == Counts{{-2, 1}, {-1, 2}, {0, 15}, {1, 15}, {2, 2}, {3, 1}});
    CHECK(report.total.total() == 36);
    CHECK(report.checks.symmetric);
    CHECK(report.checks.unbroken);
    CHECK(report.flags.empty());
    CHECK(report.total.to_string() == "{-2:1, -1:2, 0:15, 1:15, 2:2, 3:1}");
}

TEST_CASE("type A base M1(1|) has spectrum {0,1}") {
    const auto report = full_spectrum(parse_seaweed_literal("A1 a=1 b="));
    CHECK(report.total.counts() == Counts{{0, 1}, {1, 1}});
}

TEST_CASE("prefix-sum component spectra equal direct root evaluation") {
    std::mt19937_64 rng(41);
    int tested = 0;
    for (int trial = 0; trial < 3000 && tested < 400; ++trial) {
        const Family f = static_cast<Family>(trial % 3);
        const auto s = testing::random_seaweed(rng, f, 1 + static_cast<int>(rng() % 10));
        const OrbitMeander m(s);
        if (!is_frobenius(m).frobenius) continue;
        ++tested;
        const auto simple = solve_simple_eigenvalues(m);
        for (const auto& c : all_components(s))
            CHECK(component_spectrum(c, simple, s.spec()) == generic_component_spectrum(c, simple, s.spec()));
    }
    CHECK(tested >= 100);
}

TEST_CASE("non-Frobenius input is refused") {
    const auto s = parse_seaweed_literal("A7 top=7,6,5,4,3,2 bottom=7,6,4,3,2,1");
    CHECK_THROWS_AS(full_spectrum(s), Error);
    try {
        solve_simple_eigenvalues(OrbitMeander(s));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFrobenius);
    }
}

TEST_CASE("symmetry and unbroken checks") {
    CHECK(check_symmetry(EigenvalueMultiset({{0, 1}, {1, 1}})));
    CHECK(check_symmetry(EigenvalueMultiset({{-1, 1}, {0, 1}, {1, 1}, {2, 1}})));
    CHECK_FALSE(check_symmetry(EigenvalueMultiset({{0, 2}, {1, 1}})));
    CHECK_FALSE(check_symmetry(EigenvalueMultiset({{-1, 1}, {0, 1}, {1, 1}})));
    CHECK(check_unbroken(EigenvalueMultiset({{-1, 1}, {0, 1}, {1, 1}})));
    CHECK_FALSE(check_unbroken(EigenvalueMultiset({{0, 1}, {2, 1}})));
    try {
        check_unbroken(EigenvalueMultiset{});
        FAIL("expected EmptyMultiset");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyMultiset);
    }
    EigenvalueMultiset ms;
    ms.add(3, 0);
    CHECK(ms.empty());
    ms.add(3);
    ms.merge(EigenvalueMultiset({{3, 2}, {-1, 1}}));
    CHECK(ms.count(3) == 3);
    CHECK(ms.total() == 4);
}

TEST_CASE("symmetric roots in a type-A component") {
    // Bottom component {a5, a4, a3, a2} of the running example.
    const Component c{Side::Bottom, 2, 5, Family::A};
    CHECK(symmetric_root(interval(8, 3, 5), c) == interval(8, 2, 2));
    CHECK(symmetric_root(interval(8, 4, 5), c) == interval(8, 2, 3));
    CHECK(symmetric_root(interval(8, 2, 2), c) == interval(8, 3, 5));
    CHECK_FALSE(symmetric_root(interval(8, 2, 5), c).has_value());
    CHECK_FALSE(symmetric_root(interval(8, 3, 4), c).has_value());
    CHECK_THROWS_AS(symmetric_root(interval(8, 5, 6), c), Error);
    CHECK_THROWS_AS(symmetric_root(interval(8, 2, 2), Component{Side::Top, 1, 3, Family::C}), Error);
}

TEST_CASE("symmetric roots pair up and tile a centred interval") {
    for (int k = 1; k <= 9; ++k) {
        const Component c{Side::Top, 3, 2 + k, Family::A};
        const int n = k + 3;
        for (int lo = c.lo; lo <= c.hi; ++lo)
            for (int hi = lo; hi <= c.hi; ++hi) {
                const auto partner = symmetric_root(interval(n, lo, hi), c);
                const int i = lo - c.lo + 1, j = hi - c.lo + 1;
                CHECK(partner.has_value() == (i + j != k + 1));
                if (!partner) continue;
                CHECK(symmetric_root(*partner, c) == interval(n, lo, hi));
                const auto ps = support(*partner);
                const int a = std::min(lo, ps.front()), b = std::max(hi, ps.back());
                CHECK(ps.size() + static_cast<std::size_t>(hi - lo + 1) == static_cast<std::size_t>(b - a + 1));
                CHECK((a - c.lo) == (c.hi - b));  // centred
            }
    }
}

TEST_CASE("symmetric-root pairs and component sums hold on every Frobenius seaweed up to rank 6") {
    for (Family f : {Family::A, Family::B, Family::C})
        for (int n = 1; n <= 6; ++n)
            testing::for_each_seaweed(f, n, [&](const Seaweed& s) {
                const OrbitMeander m(s);
                if (!is_frobenius(m).frobenius) return;
                const auto simple = solve_simple_eigenvalues(m);
                for (const auto& c : all_components(s)) {
                    if (c.kind != Family::A) continue;
                    CHECK(component_sum_check(c, simple));
                    for (int lo = c.lo; lo <= c.hi; ++lo)
                        for (int hi = lo; hi <= c.hi; ++hi) {
                            Root r = interval(n, lo, hi);
                            if (c.side == Side::Bottom) r = r.negated();
                            const auto p = symmetric_root(r, c);
                            if (p) CHECK(evaluate(r, simple.values) + evaluate(*p, simple.values) == 1);
                        }
                }
            });
}

TEST_CASE("per-kind value ranges") {
    CHECK(value_allowed_for_kind(Family::A, -2));
    CHECK(value_allowed_for_kind(Family::A, 3));
    CHECK_FALSE(value_allowed_for_kind(Family::A, 4));
    CHECK_FALSE(value_allowed_for_kind(Family::A, -3));
    CHECK(value_allowed_for_kind(Family::B, -1));
    CHECK_FALSE(value_allowed_for_kind(Family::B, 2));
    CHECK(value_allowed_for_kind(Family::C, 0));
    CHECK_FALSE(value_allowed_for_kind(Family::C, -1));
}

TEST_CASE("low-rank B/C components are flagged") {
    const auto r = full_spectrum(parse_seaweed_literal("B2 top=2,1 bottom="));
    CHECK(r.simple.as_integers() == std::vector<long long>{0, 1});
    CHECK(r.total.counts() == Counts{{0, 3}, {1, 3}});
    REQUIRE(r.flags.size() == 1);
    CHECK(r.flags[0] == "low-rank-row:B2@top");
}

TEST_CASE("type-A components of B seaweeds can leave the A value range from rank 7") {
    const auto s = parse_seaweed_literal("B7 top=7,6,5,4,3,2 bottom=7,6,5,4,2,1");
    const auto r = full_spectrum(s);
    CHECK(r.simple.as_integers() == std::vector<long long>{0, -1, 3, -1, 2, -3, 1});
    CHECK_FALSE(value_allowed_for_kind(Family::A, r.simple.at(6)));  // top component, sign +1
    CHECK(r.checks.symmetric);
    CHECK(r.checks.unbroken);
    CHECK(oracle_spectrum(s, 4) == r.total);

    // Type C has no such case up to rank 6.
    for (int n = 2; n <= 6; ++n)
        testing::for_each_seaweed(Family::C, n, [&](const Seaweed& c) {
            const OrbitMeander m(c);
            if (!is_frobenius(m).frobenius) return;
            const auto simple = solve_simple_eigenvalues(m);
            for (const auto& comp : all_components(c))
                for (int i = comp.lo; i <= comp.hi; ++i)
                    CHECK(value_allowed_for_kind(comp.kind, sign_of(comp.side) * simple.at(i)));
        });
}
