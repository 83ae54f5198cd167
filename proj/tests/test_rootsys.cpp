#include <doctest.h>

#include <set>

#include "seaweed/errors.hpp"
#include "seaweed/rootsys.hpp"

using namespace seaweed;

namespace {

// Cartan matrix in reversed indexing, C[i][j] = <alpha_i, alpha_j^vee>, 1-based.
std::vector<std::vector<int>> cartan(Family f, int n) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 1; i <= n; ++i) c[i][i] = 2;
    for (int i = 1; i < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    if (n >= 2 && f == Family::B) c[2][1] = -2;  // alpha_1 short
    if (n >= 2 && f == Family::C) c[1][2] = -2;  // alpha_1 long
    return c;
}

// Positive roots by closing the simple roots under simple reflections.
std::set<std::vector<int>> reflection_closure(Family f, int n) {
    const auto c = cartan(f, n);
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> todo;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> r(static_cast<std::size_t>(n), 0);
        r[i - 1] = 1;
        todo.push_back(r);
    }
    while (!todo.empty()) {
        auto r = todo.back();
        todo.pop_back();
        if (!roots.insert(r).second) continue;
        for (int j = 1; j <= n; ++j) {
            int pairing = 0;
            for (int i = 1; i <= n; ++i) pairing += r[i - 1] * c[i][j];
            auto s = r;
            s[j - 1] -= pairing;
            bool positive = false, negative = false;
            for (int v : s) {
                positive = positive || v > 0;
                negative = negative || v < 0;
            }
            if (positive && !negative) todo.push_back(s);
        }
    }
    return roots;
}

}  // namespace

TEST_CASE("positive roots equal the reflection closure of the simple roots") {
    for (Family f : {Family::A, Family::B, Family::C}) {
        for (int n = 1; n <= 7; ++n) {
            const RootSystemSpec spec(f, n);
            std::set<std::vector<int>> got;
            for (const auto& r : positive_roots(spec)) {
                CHECK(r.sign == RootSign::Positive);
                got.insert(r.coeffs);
            }
            CHECK(got == reflection_closure(f, n));
            CHECK(static_cast<long long>(got.size()) == positive_root_count(f, n));
        }
    }
}

TEST_CASE("positive root counts") {
    CHECK(positive_root_count(Family::A, 4) == 10);
    CHECK(positive_root_count(Family::B, 3) == 9);
    CHECK(positive_root_count(Family::C, 8) == 64);
    CHECK(positive_roots(RootSystemSpec(Family::C, 2)).size() == 4);
}

TEST_CASE("simple roots and orthogonal forms") {
    const RootSystemSpec c3(Family::C, 3);
    CHECK(to_orthogonal(c3, simple_root(c3, 1)) == std::vector<int>{0, 0, 2});
    CHECK(to_orthogonal(c3, simple_root(c3, 3)) == std::vector<int>{1, -1, 0});
    const RootSystemSpec b3(Family::B, 3);
    CHECK(to_orthogonal(b3, simple_root(b3, 1)) == std::vector<int>{0, 0, 1});
    const RootSystemSpec a2(Family::A, 2);
    CHECK(a2.ambient_coords() == 3);
    CHECK(to_orthogonal(a2, simple_root(a2, 2)) == std::vector<int>{1, -1, 0});
    CHECK(c3.name() == "C3");
    for (Family f : {Family::A, Family::B, Family::C}) {
        const RootSystemSpec spec(f, 5);
        for (const auto& r : positive_roots(spec)) {
            const auto coords = to_orthogonal(spec, r);
            CHECK(from_orthogonal(spec, coords) == r);
            CHECK(from_orthogonal(spec, to_orthogonal(spec, r.negated())) == r.negated());
        }
    }
}

TEST_CASE("highest roots") {
    // 2a_n + ... + 2a_2 + a_1 in C_n, a_n + 2a_{n-1} + ... + 2a_1 in B_n
    auto highest = [](const RootSystemSpec& spec) {
        auto roots = positive_roots(spec);
        return *std::max_element(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
            int sx = 0, sy = 0;
            for (int v : x.coeffs) sx += v;
            for (int v : y.coeffs) sy += v;
            return sx < sy;
        });
    };
    CHECK(highest(RootSystemSpec(Family::C, 4)).coeffs == std::vector<int>{1, 2, 2, 2});
    CHECK(highest(RootSystemSpec(Family::B, 4)).coeffs == std::vector<int>{2, 2, 2, 1});
    CHECK(highest(RootSystemSpec(Family::A, 4)).coeffs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("support, evaluate and printing") {
    const Root r{{1, 2, 0, 2}, RootSign::Positive};
    CHECK(support(r) == std::vector<int>{1, 2, 4});
    const std::vector<Rational> v{1, 0, 5, -2};
    CHECK(evaluate(r, v) == -3);
    CHECK(evaluate(r.negated(), v) == 3);
    CHECK(r.to_string() == "2a4+2a2+a1");
    CHECK(r.negated().to_string() == "-(2a4+2a2+a1)");
    CHECK_THROWS_AS(evaluate(r, std::vector<Rational>{1, 2}), Error);
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(RootSystemSpec(Family::C, 0), Error);
    CHECK_THROWS_AS(family_from_char('D'), Error);
    CHECK(family_from_char('b') == Family::B);
}
