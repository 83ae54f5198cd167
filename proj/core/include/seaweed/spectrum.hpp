#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

/// Values alpha_i(F^) of the simple roots on a principal element.
struct SimpleEigenvalues {
    std::vector<Rational> values;  // position i-1 holds alpha_i(F^)
    bool integral = true;

    long long at(int index) const;  // requires integral
    std::vector<long long> as_integers() const;
};

/// One equation of the simple-eigenvalue system, read as
///   sign(side) * x_i = value                (Fixed)
///   sign(side) * (x_i + x_j) = value        (PairSum)
struct LinearConstraint {
    enum class Kind { Fixed, PairSum };
    enum class Provenance { TableRow, OrbitRelation };

    Kind kind = Kind::Fixed;
    int i = 0;
    int j = 0;  // PairSum only
    int value = 0;
    Side side = Side::Top;
    Provenance provenance = Provenance::TableRow;

    bool operator==(const LinearConstraint&) const = default;
};

std::vector<LinearConstraint> constraint_system(const OrbitMeander& m);

/// Unique exact solution of constraint_system(m). Throws NotFrobenius,
/// Underdetermined, Inconsistent or NonIntegerSolution.
SimpleEigenvalues solve_simple_eigenvalues(const OrbitMeander& m);

class EigenvalueMultiset {
public:
    EigenvalueMultiset() = default;
    explicit EigenvalueMultiset(std::map<long long, long long> counts);

    void add(long long eigenvalue, long long multiplicity = 1);
    void merge(const EigenvalueMultiset& other);

    long long count(long long eigenvalue) const;
    long long total() const noexcept;
    bool empty() const noexcept { return counts_.empty(); }
    const std::map<long long, long long>& counts() const noexcept { return counts_; }

    std::string to_string() const;  // "{-2:1, -1:2, 0:15}"

    bool operator==(const EigenvalueMultiset&) const = default;

private:
    std::map<long long, long long> counts_;
};

/// Eigenvalues contributed by one component: every root with support inside
/// the component (positive on top, negative on the bottom) evaluated on the
/// simple eigenvalues, plus ceil(|c|/2) zeros for type A or |c| zeros for B/C.
EigenvalueMultiset component_spectrum(const Component& c, const SimpleEigenvalues& simple, const RootSystemSpec& spec);

bool check_symmetry(const EigenvalueMultiset& ms);
/// Throws EmptyMultiset on empty input.
bool check_unbroken(const EigenvalueMultiset& ms);
/// Signed sum of simple eigenvalues over a type-A component equals 1.
bool component_sum_check(const Component& c, const SimpleEigenvalues& simple);

/// Partner root with alpha(F^) + partner(F^) = 1 inside a type-A component;
/// nullopt for the centred roots (j + i = k + 1 after renumbering).
std::optional<Root> symmetric_root(const Root& root, const Component& c);

struct SpectrumChecks {
    bool symmetric = false;
    bool unbroken = false;
};

struct ComponentSpectrum {
    Component component;
    EigenvalueMultiset multiset;
};

struct SpectrumReport {
    Seaweed seaweed;
    SimpleEigenvalues simple;
    std::vector<ComponentSpectrum> per_component;
    EigenvalueMultiset total;
    SpectrumChecks checks;
    std::vector<std::string> flags;  // e.g. "low-rank-row:B2@top"
};

/// Throws NotFrobenius.
SpectrumReport full_spectrum(const Seaweed& s);

/// Values allowed for alpha_i(F^) inside a component of the given kind.
bool value_allowed_for_kind(Family kind, long long value) noexcept;

}  // namespace seaweed
