#pragma once

// Matrix realisation of a seaweed inside sl(n+1), so(2n+1) or sp(2n) and the
// exact computations built on it: Kirillov form, index, principal element and
// the spectrum of its adjoint action.
//
// Conventions: positions p < n carry weight e_{p+1}; for B/C the mirrored
// position carries -e_{p+1} (and the middle of so(2n+1) weight 0). The
// invariant form J is anti-diagonal, ones for so(2n+1) and [[0,K],[-K,0]] for
// sp(2n), so upper-triangular matrices form the positive Borel.

#include <cstdint>
#include <string>
#include <vector>

#include "seaweed/spectrum.hpp"

namespace seaweed {

using IntMatrix = Matrix<long>;  // long, not long long: gmpxx has no long long overloads

struct BasisLabel {
    bool cartan = false;
    int cartan_index = 0;  // 1-based, cartan only
    Root root;             // roots only

    std::string to_string() const;  // "h3", "a2+a1", "-a4"
};

struct BracketTerm {
    int index;
    Rational coeff;
};

class MatrixAlgebra {
public:
    std::size_t dim() const noexcept { return labels_.size(); }
    int ambient() const noexcept { return ambient_; }
    const Seaweed& seaweed() const noexcept { return seaweed_; }

    const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
    const IntMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
    /// [x_i, x_j] in basis coordinates (sparse, nonzero terms only).
    const std::vector<BracketTerm>& bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

private:
    friend MatrixAlgebra realize(const Seaweed& s);
    explicit MatrixAlgebra(Seaweed s) : seaweed_(std::move(s)) {}

    Seaweed seaweed_;
    int ambient_ = 0;
    std::vector<BasisLabel> labels_;
    std::vector<IntMatrix> matrices_;
    std::vector<std::vector<BracketTerm>> table_;
};

/// Basis: Cartan, then positive roots supported in pi1, then negative roots
/// supported in pi2. Throws InternalClosureFailure if a commutator leaves the span.
MatrixAlgebra realize(const Seaweed& s);

/// F(x_i) = coeffs[i].
using Functional = std::vector<Rational>;

Functional random_functional(std::size_t dim, std::uint64_t seed);

/// B[i][j] = F([x_i, x_j]).
Matrix<Rational> kirillov_matrix(const MatrixAlgebra& alg, const Functional& f);

/// dim - max rank of B_F over `trials` random integer functionals.
int index(const MatrixAlgebra& alg, int trials, std::uint64_t seed);

/// Throws RetryLimitExceeded when no sampled F has nonsingular B_F.
Functional sample_frobenius_functional(const MatrixAlgebra& alg, std::uint64_t seed, int retries = 32);

/// Coordinates c with sum_i c_i F([x_i, x_j]) = F(x_j) for every j. Throws SingularForm.
std::vector<Rational> principal_element(const MatrixAlgebra& alg, const Functional& f);

/// Matrix of ad(element) in the basis: column j holds [element, x_j].
Matrix<Rational> ad_matrix(const MatrixAlgebra& alg, const std::vector<Rational>& element);

/// Eigenvalues of ad(element) with algebraic multiplicity. Throws NonIntegerSpectrum.
EigenvalueMultiset ad_spectrum(const MatrixAlgebra& alg, const std::vector<Rational>& element);

/// realize + sample + principal_element + ad_spectrum.
EigenvalueMultiset oracle_spectrum(const Seaweed& s, std::uint64_t seed);

}  // namespace seaweed
