#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/seaweed.hpp"

using namespace seaweed;

namespace {

const char* kRunning = "C8 top=8,7,6,3,2,1 bottom=8,7,5,4,3,2";

ErrorCode code_of(const std::string& literal) {
    try {
        parse_seaweed_literal(literal);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error for " << literal);
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("running example parses and reports its pieces") {
    const auto s = parse_seaweed_literal(kRunning);
    CHECK(s.rank() == 8);
    CHECK(s.top() == std::vector<int>{1, 2, 3, 6, 7, 8});
    CHECK(s.bottom() == std::vector<int>{2, 3, 4, 5, 7, 8});
    CHECK(to_literal(s) == kRunning);
    CHECK(dimension(s) == 36);

    const auto top = components(s, Side::Top);
    REQUIRE(top.size() == 2);
    CHECK(top[0] == Component{Side::Top, 6, 8, Family::A});
    CHECK(top[1] == Component{Side::Top, 1, 3, Family::C});
    const auto bottom = components(s, Side::Bottom);
    REQUIRE(bottom.size() == 2);
    CHECK(bottom[0] == Component{Side::Bottom, 7, 8, Family::A});
    CHECK(bottom[1] == Component{Side::Bottom, 2, 5, Family::A});
    CHECK(bottom[1].indices() == std::vector<int>{5, 4, 3, 2});
    CHECK(all_components(s).size() == 4);
}

TEST_CASE("composition encoding") {
    const auto s = parse_seaweed_literal(kRunning);
    const auto [a, b] = to_compositions(s);
    CHECK(a.parts == std::vector<int>{4, 1});
    CHECK(b.parts == std::vector<int>{3, 5});
    CHECK(to_composition_literal(s) == "C8 a=4,1 b=3,5");
    CHECK(parse_seaweed_literal("C8 a=4,1 b=3,5") == s);

    // M_3(1,1,1 | empty): pi1 empty, pi2 everything
    const auto base = Seaweed::from_compositions(RootSystemSpec(Family::C, 3), Composition{{1, 1, 1}}, Composition{});
    CHECK(base.top().empty());
    CHECK(base.bottom() == std::vector<int>{1, 2, 3});
    CHECK(parse_seaweed_literal("A1 a=1 b=") == Seaweed::from_subsets(RootSystemSpec(Family::A, 1), {}, {1}));
}

TEST_CASE("composition bijection round-trips over every subset pair") {
    for (Family f : {Family::A, Family::B, Family::C})
        for (int n = 1; n <= 6; ++n)
            testing::for_each_seaweed(f, n, [&](const Seaweed& s) {
                const auto [a, b] = to_compositions(s);
                CHECK(a.sum() <= n);
                CHECK(b.sum() <= n);
                CHECK(Seaweed::from_compositions(s.spec(), a, b) == s);
                CHECK(parse_seaweed_literal(to_literal(s)) == s);
                CHECK(parse_seaweed_literal(to_composition_literal(s)) == s);
            });
}

TEST_CASE("dimension equals Cartan plus roots supported on each side") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const Family f = static_cast<Family>(trial % 3);
        const auto s = testing::random_seaweed(rng, f, 1 + static_cast<int>(rng() % 9));
        long long count = s.rank();
        for (const auto& r : positive_roots(s.spec())) {
            bool top = true, bottom = true;
            for (int i : support(r)) {
                top = top && s.in_top(i);
                bottom = bottom && s.in_bottom(i);
            }
            count += top + bottom;
        }
        CHECK(dimension(s) == count);
    }
    CHECK(dimension(parse_seaweed_literal("C2 top=2,1 bottom=2,1")) == 10);
}

TEST_CASE("component kinds") {
    const auto s = parse_seaweed_literal("B5 top=5,4,2,1 bottom=5,3,2,1");
    CHECK(components(s, Side::Top)[1].kind == Family::B);
    CHECK(components(s, Side::Top)[0].kind == Family::A);
    const auto a = parse_seaweed_literal("A5 top=5,4,2,1 bottom=5,3,2,1");
    for (const auto& c : all_components(a)) CHECK(c.kind == Family::A);
}

TEST_CASE("rejected input") {
    CHECK(code_of("C3 top=3 bottom=3,2") == ErrorCode::UnionNotFull);
    CHECK(code_of("C3 top=3,x bottom=1") == ErrorCode::ParseError);
    CHECK(code_of("C3 top=4 bottom=3,2,1") == ErrorCode::ParseError);
    CHECK(code_of("D3 top=3 bottom=2,1") == ErrorCode::ParseError);
    CHECK(code_of("C0 top= bottom=") == ErrorCode::ParseError);
    CHECK(code_of("C3 top=3,2,1 bottom") == ErrorCode::ParseError);
    CHECK(code_of("C3 top=3 a=1") == ErrorCode::ParseError);
    CHECK(code_of("C3 top=3 top=2 bottom=1") == ErrorCode::ParseError);
    CHECK(code_of("C3 a=2,2 b=") == ErrorCode::ParseError);
    CHECK(code_of("C3 a=0 b=") == ErrorCode::ParseError);
    CHECK(code_of("") == ErrorCode::ParseError);
    try {
        parse_seaweed_literal("C3 top=3 bottom=3,2");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("direct sum") != std::string::npos);
    }
}
