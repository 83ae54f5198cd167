#pragma once

// Exact linear algebra kernels shared by the simple-eigenvalue solver and the
// matrix oracle. Everything here is exact: GMP integers and rationals, or
// residues modulo word-sized primes that are lifted back with the CRT.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace seaweed {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Every intermediate stays integral.
std::size_t bareiss_rank(Matrix<Integer> m);

/// Solves A x = b for square A. Forward elimination is fraction-free; only the
/// back substitution touches rationals. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> bareiss_solve(Matrix<Integer> a, std::span<const Integer> b);

/// det(xI - M) for an integer matrix, coefficients low degree first (monic).
///
/// Computed modulo enough 62-bit primes to exceed twice the Hadamard-style
/// coefficient bound (D * max|m_ij|)^D, reduced to Hessenberg form per prime,
/// and reconstructed with Garner's CRT into symmetric residues. The result is
/// the exact integer characteristic polynomial.
std::vector<Integer> charpoly(const Matrix<Integer>& m);

/// Divides out every root of `poly` (low degree first) of the form scale * k for
/// integers k with |k| <= bound. Returns (k, multiplicity) pairs ascending in k
/// and leaves the unfactored quotient in `poly`.
std::vector<std::pair<long long, long long>> extract_scaled_integer_roots(std::vector<Integer>& poly,
                                                                          const Integer& scale,
                                                                          long long bound);

// Sparse system with at most a handful of nonzeros per row. Elimination always
// pivots on the shortest live row, so rows with two unknowns stay at two.
class SparseLinearSystem {
public:
    struct Term {
        int var;
        Rational coeff;
    };
    struct Row {
        std::vector<Term> terms;
        Rational rhs;
    };

    enum class Status { Unique, Underdetermined, Inconsistent };

    struct Solution {
        Status status = Status::Unique;
        std::vector<Rational> values;       // meaningful only when Unique
        std::vector<int> free_vars;         // Underdetermined: variables left unpinned
        std::optional<std::size_t> bad_row; // Inconsistent: an input row that reduced to 0 = c
    };

    explicit SparseLinearSystem(int num_vars) : num_vars_(num_vars) {}

    void add_row(std::vector<Term> terms, Rational rhs);

    int num_vars() const noexcept { return num_vars_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    Solution solve() const;

private:
    int num_vars_;
    std::vector<Row> rows_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace seaweed
