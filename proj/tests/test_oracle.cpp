#include <doctest.h>

#include "helpers.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/oracle.hpp"

using namespace seaweed;

namespace {

using Counts = std::map<long long, long long>;

Matrix<Rational> combination(const MatrixAlgebra& alg, const std::vector<BracketTerm>& terms) {
    const auto n = static_cast<std::size_t>(alg.ambient());
    Matrix<Rational> out(n, n);
    for (const auto& t : terms)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += t.coeff * alg.matrix(static_cast<std::size_t>(t.index))(i, j);
    return out;
}

Matrix<Rational> commutator(const IntMatrix& x, const IntMatrix& y) {
    const std::size_t n = x.rows();
    Matrix<Rational> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long v = 0;
            for (std::size_t k = 0; k < n; ++k) v += x(i, k) * y(k, j) - y(i, k) * x(k, j);
            out(i, j) = v;
        }
    return out;
}

// Coordinates of [x, y] for coordinate vectors x, y.
std::vector<Rational> bracket(const MatrixAlgebra& alg, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> out(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (y[j] == 0) continue;
            for (const auto& t : alg.bracket(i, j)) out[static_cast<std::size_t>(t.index)] += x[i] * y[j] * t.coeff;
        }
    }
    return out;
}

std::vector<Rational> unit(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim);
    v[i] = 1;
    return v;
}

// Invariant form written out independently of the library.
IntMatrix form(Family f, int n) {
    const int size = f == Family::B ? 2 * n + 1 : 2 * n;
    IntMatrix j(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (int p = 0; p < size; ++p)
        j(static_cast<std::size_t>(p), static_cast<std::size_t>(size - 1 - p)) = (f == Family::C && p >= n) ? -1 : 1;
    return j;
}

}  // namespace

TEST_CASE("lower Borel of sl(2)") {
    const auto alg = realize(parse_seaweed_literal("A1 top= bottom=1"));
    REQUIRE(alg.dim() == 2);
    CHECK(alg.label(0).to_string() == "h1");
    CHECK(alg.label(1).to_string() == "-(a1)");
    REQUIRE(alg.bracket(0, 1).size() == 1);
    CHECK(alg.bracket(0, 1)[0].index == 1);
    CHECK(alg.bracket(0, 1)[0].coeff == -2);

    const Functional f{0, 1};
    const auto b = kirillov_matrix(alg, f);
    CHECK(b(0, 1) == -2);
    CHECK(b(1, 0) == 2);
    CHECK(b(0, 0) == 0);
    CHECK(index(alg, 5, 1) == 0);
    const auto c = principal_element(alg, f);
    CHECK(c == std::vector<Rational>{Rational(-1, 2), 0});
    CHECK(ad_spectrum(alg, c).counts() == Counts{{0, 1}, {1, 1}});
    CHECK_THROWS_AS(principal_element(alg, Functional{1, 0}), Error);
}

TEST_CASE("full sp(4)") {
    const auto alg = realize(parse_seaweed_literal("C2 top=2,1 bottom=2,1"));
    CHECK(alg.dim() == 10);
    CHECK(alg.ambient() == 4);
    CHECK(index(alg, 5, 3) == 2);
    try {
        sample_frobenius_functional(alg, 9);
        FAIL("expected RetryLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RetryLimitExceeded);
    }
}

TEST_CASE("Kirillov matrices are skew and vanish for F = 0") {
    const auto alg = realize(parse_seaweed_literal("B3 top=3,1 bottom=2,1"));
    const auto zero = kirillov_matrix(alg, Functional(alg.dim()));
    const auto b = kirillov_matrix(alg, random_functional(alg.dim(), 4));
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            CHECK(zero(i, j) == 0);
            CHECK(b(i, j) == -b(j, i));
        }
    CHECK_THROWS_AS(kirillov_matrix(alg, Functional(3)), Error);
}

TEST_CASE("basis matrices preserve the invariant form and brackets match commutators") {
    for (const char* lit : {"C3 top=3,2,1 bottom=3,2,1", "B3 top=3,2,1 bottom=3,2,1", "A3 top=3,2,1 bottom=3,2,1",
                            "B2 top=2 bottom=1", "C3 top=3,1 bottom=2,1"}) {
        const auto s = parse_seaweed_literal(lit);
        const auto alg = realize(s);
        CHECK(static_cast<long long>(alg.dim()) == dimension(s));
        const Family f = s.spec().family();
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            const auto& x = alg.matrix(i);
            if (f == Family::A) {
                long tr = 0;
                for (std::size_t p = 0; p < x.rows(); ++p) tr += x(p, p);
                CHECK(tr == 0);
            } else {
                const auto j = form(f, s.rank());
                for (std::size_t p = 0; p < x.rows(); ++p)
                    for (std::size_t q = 0; q < x.cols(); ++q) {
                        long v = 0;
                        for (std::size_t k = 0; k < x.rows(); ++k) v += x(k, p) * j(k, q) + j(p, k) * x(k, q);
                        CHECK(v == 0);
                    }
            }
            // positive roots upper triangular, negative lower, Cartan diagonal
            for (std::size_t p = 0; p < x.rows(); ++p)
                for (std::size_t q = 0; q < x.cols(); ++q) {
                    if (x(p, q) == 0) continue;
                    if (alg.label(i).cartan) CHECK(p == q);
                    else if (alg.label(i).root.sign == RootSign::Positive) CHECK(p < q);
                    else CHECK(p > q);
                }
        }
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j)
                CHECK(combination(alg, alg.bracket(i, j)) == commutator(alg.matrix(i), alg.matrix(j)));
    }
}

TEST_CASE("bracket table is antisymmetric and satisfies Jacobi") {
    for (const char* lit : {"C2 top=2,1 bottom=2,1", "B2 top=2,1 bottom=2,1", "A3 top=3,1 bottom=2,1",
                            "C3 top=3,1 bottom=3,2"}) {
        const auto alg = realize(parse_seaweed_literal(lit));
        const std::size_t d = alg.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto xy = bracket(alg, unit(d, i), unit(d, j));
                const auto yx = bracket(alg, unit(d, j), unit(d, i));
                for (std::size_t k = 0; k < d; ++k) CHECK(xy[k] == -yx[k]);
                for (std::size_t k = 0; k < d; ++k) {
                    const auto a = bracket(alg, unit(d, i), bracket(alg, unit(d, j), unit(d, k)));
                    const auto b = bracket(alg, unit(d, j), bracket(alg, unit(d, k), unit(d, i)));
                    const auto c = bracket(alg, unit(d, k), bracket(alg, unit(d, i), unit(d, j)));
                    for (std::size_t t = 0; t < d; ++t) CHECK(a[t] + b[t] + c[t] == 0);
                }
            }
    }
}

TEST_CASE("running example through the oracle") {
    const auto s = parse_seaweed_literal("C8 top=8,7,6,3,2,1 bottom=8,7,5,4,3,2");
    const auto alg = realize(s);
    CHECK(alg.dim() == 36);
    CHECK(alg.ambient() == 16);
    CHECK(index(alg, 5, 2) == 0);
    const auto f = sample_frobenius_functional(alg, 2);
    const auto c = principal_element(alg, f);
    const auto b = kirillov_matrix(alg, f);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < alg.dim(); ++i) lhs += c[i] * b(i, j);
        CHECK(lhs == f[j]);
    }
    const auto spectrum = ad_spectrum(alg, c);
    CHECK(spectrum.counts() == Counts{{-2, 1}, {-1, 2}, {0, 15}, {1, 15}, {2, 2}, {3, 1}});
    CHECK(oracle_spectrum(s, 77) == spectrum);
}

TEST_CASE("M2(1,1|) in type C") {
    const auto s = parse_seaweed_literal("C2 a=1,1 b=");
    CHECK(oracle_spectrum(s, 5).counts() == Counts{{0, 3}, {1, 3}});
    CHECK(oracle_spectrum(s, 5) == full_spectrum(s).total);
}

TEST_CASE("index vanishes exactly on Frobenius meanders at rank <= 2") {
    for (Family f : {Family::A, Family::B, Family::C})
        for (int n = 1; n <= 2; ++n)
            testing::for_each_seaweed(f, n, [&](const Seaweed& s) {
                CHECK_MESSAGE((index(realize(s), 5, 11) == 0) == is_frobenius(OrbitMeander(s)).frobenius, to_literal(s));
            });
}

TEST_CASE("ad spectrum has dim entries") {
    const auto s = parse_seaweed_literal("B4 top=4,3,2 bottom=4,3,1");
    REQUIRE(is_frobenius(OrbitMeander(s)).frobenius);
    const auto alg = realize(s);
    const auto spec1 = ad_spectrum(alg, principal_element(alg, sample_frobenius_functional(alg, 1)));
    const auto spec2 = ad_spectrum(alg, principal_element(alg, sample_frobenius_functional(alg, 2)));
    CHECK(spec1.total() == static_cast<long long>(alg.dim()));
    CHECK(spec1 == spec2);
}
