#pragma once

// Root data for the classical families in reversed indexing:
// simple roots alpha_n, ..., alpha_1 with alpha_1 the exceptional root of B/C.
// Coefficient vectors are stored with position i-1 holding the coefficient
// of alpha_i.
//
// Orthogonal realisation (Bourbaki index b = n + 1 - i):
//   A_n : alpha_i = e_{n+1-i} - e_{n+2-i},  coordinates e_1..e_{n+1}
//   B_n : alpha_i = e_{n+1-i} - e_{n+2-i} (i >= 2),  alpha_1 = e_n   (short)
//   C_n : alpha_i = e_{n+1-i} - e_{n+2-i} (i >= 2),  alpha_1 = 2 e_n (long)

#include <span>
#include <string>
#include <vector>

#include "seaweed/exact.hpp"

namespace seaweed {

enum class Family { A, B, C };

char to_char(Family f) noexcept;
Family family_from_char(char c);

class RootSystemSpec {
public:
    RootSystemSpec(Family family, int rank);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    /// Length of the orthogonal coordinate vectors (n + 1 for type A, else n).
    int ambient_coords() const noexcept { return family_ == Family::A ? rank_ + 1 : rank_; }

    std::string name() const;  // e.g. "C8"

    bool operator==(const RootSystemSpec&) const = default;

private:
    Family family_;
    int rank_;
};

enum class RootSign { Positive, Negative };

struct Root {
    std::vector<int> coeffs;
    RootSign sign = RootSign::Positive;

    Root negated() const;
    std::string to_string() const;  // "2a3+2a2+a1", negatives prefixed with '-'

    auto operator<=>(const Root&) const = default;
};

Root simple_root(const RootSystemSpec& spec, int index);

/// Every positive root once, ordered lexicographically on coeffs.
std::vector<Root> positive_roots(const RootSystemSpec& spec);

/// Indices (reversed numbering) with a nonzero coefficient, ascending.
std::vector<int> support(const Root& root);

/// beta(h) = sum c_i * values[i-1], negated for negative roots.
Rational evaluate(const Root& root, std::span<const Rational> values);

std::vector<int> to_orthogonal(const RootSystemSpec& spec, const Root& root);
Root from_orthogonal(const RootSystemSpec& spec, std::span<const int> coords);

/// Number of positive roots of the subsystem spanned by a connected run of
/// `size` simple roots: size(size+1)/2 for type A, size^2 for B and C.
long long positive_root_count(Family kind, int size) noexcept;

}  // namespace seaweed
