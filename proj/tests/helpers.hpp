#pragma once

// Small generators and reference implementations shared by the tests.

#include <random>
#include <vector>

#include "seaweed/census.hpp"
#include "seaweed/seaweed.hpp"

namespace testing {

inline seaweed::Seaweed random_seaweed(std::mt19937_64& rng, seaweed::Family family, int rank) {
    std::uniform_int_distribution<int> digit(0, 2);
    std::vector<int> pi1, pi2;
    for (int k = 1; k <= rank; ++k) {
        const int d = digit(rng);
        if (d != 1) pi1.push_back(k);
        if (d != 0) pi2.push_back(k);
    }
    return seaweed::Seaweed::from_subsets(seaweed::RootSystemSpec(family, rank), pi1, pi2);
}

template <typename F>
void for_each_seaweed(seaweed::Family family, int rank, F&& f) {
    for (std::uint64_t i = 0; i < seaweed::census_size(rank); ++i) f(seaweed::census_seaweed(family, rank, i));
}

// Gauss-Jordan over the rationals, no pivoting tricks.
inline std::size_t naive_rank(std::vector<std::vector<seaweed::Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const seaweed::Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace testing
