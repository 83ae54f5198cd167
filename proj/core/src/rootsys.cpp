#include "seaweed/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seaweed/errors.hpp"

namespace seaweed {

char to_char(Family f) noexcept {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
    }
    return '?';
}

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        default: break;
    }
    throw Error(ErrorCode::InvalidArgument, std::string("unknown family '") + c + "' (expected A, B or C)");
}

RootSystemSpec::RootSystemSpec(Family family, int rank) : family_(family), rank_(rank) {
    if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
}

std::string RootSystemSpec::name() const { return std::string(1, to_char(family_)) + std::to_string(rank_); }

Root Root::negated() const {
    return Root{coeffs, sign == RootSign::Positive ? RootSign::Negative : RootSign::Positive};
}

std::string Root::to_string() const {
    std::ostringstream out;
    if (sign == RootSign::Negative) out << "-(";
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) out << '+';
        if (coeffs[i] != 1) out << coeffs[i];
        out << 'a' << (i + 1);
        first = false;
    }
    if (first) out << '0';
    if (sign == RootSign::Negative) out << ')';
    return out.str();
}

Root simple_root(const RootSystemSpec& spec, int index) {
    if (index < 1 || index > spec.rank()) throw Error(ErrorCode::InvalidArgument, "simple root index out of range");
    Root r{std::vector<int>(static_cast<std::size_t>(spec.rank()), 0), RootSign::Positive};
    r.coeffs[static_cast<std::size_t>(index - 1)] = 1;
    return r;
}

std::vector<int> to_orthogonal(const RootSystemSpec& spec, const Root& root) {
    const int n = spec.rank();
    if (static_cast<int>(root.coeffs.size()) != n) throw Error(ErrorCode::LengthMismatch, "root has wrong length");
    std::vector<int> v(static_cast<std::size_t>(spec.ambient_coords()), 0);
    for (int i = 1; i <= n; ++i) {
        const int c = root.coeffs[static_cast<std::size_t>(i - 1)];
        if (c == 0) continue;
        if (i == 1 && spec.family() != Family::A) {
            v[static_cast<std::size_t>(n - 1)] += (spec.family() == Family::C ? 2 : 1) * c;
            continue;
        }
        const int b = n + 1 - i;  // Bourbaki index, 1-based
        v[static_cast<std::size_t>(b - 1)] += c;
        v[static_cast<std::size_t>(b)] -= c;
    }
    if (root.sign == RootSign::Negative)
        for (auto& x : v) x = -x;
    return v;
}

Root from_orthogonal(const RootSystemSpec& spec, std::span<const int> coords) {
    const int n = spec.rank();
    if (static_cast<int>(coords.size()) != spec.ambient_coords())
        throw Error(ErrorCode::LengthMismatch, "coordinate vector has wrong length");
    std::vector<int> prefix(coords.size() + 1, 0);
    std::partial_sum(coords.begin(), coords.end(), prefix.begin() + 1);

    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = prefix[static_cast<std::size_t>(n + 1 - i)];
    switch (spec.family()) {
        case Family::A:
            if (prefix.back() != 0) throw Error(ErrorCode::InvalidArgument, "type-A weight must have zero coordinate sum");
            break;
        case Family::B:
            c[0] = prefix[static_cast<std::size_t>(n)];
            break;
        case Family::C:
            if (prefix[static_cast<std::size_t>(n)] % 2 != 0)
                throw Error(ErrorCode::InvalidArgument, "not in the type-C root lattice");
            c[0] = prefix[static_cast<std::size_t>(n)] / 2;
            break;
    }
    const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw Error(ErrorCode::InvalidArgument, "mixed-sign coefficients: not a root");
    Root r{std::move(c), nonneg ? RootSign::Positive : RootSign::Negative};
    if (r.sign == RootSign::Negative)
        for (auto& x : r.coeffs) x = -x;
    return r;
}

std::vector<Root> positive_roots(const RootSystemSpec& spec) {
    const int dims = spec.ambient_coords();
    std::vector<std::vector<int>> forms;
    auto unit = [&](int a, int sa, int b, int sb) {
        std::vector<int> v(static_cast<std::size_t>(dims), 0);
        v[static_cast<std::size_t>(a)] += sa;
        if (b >= 0) v[static_cast<std::size_t>(b)] += sb;
        return v;
    };
    for (int a = 0; a < dims; ++a) {
        for (int b = a + 1; b < dims; ++b) {
            forms.push_back(unit(a, 1, b, -1));
            if (spec.family() != Family::A) forms.push_back(unit(a, 1, b, 1));
        }
        if (spec.family() == Family::B) forms.push_back(unit(a, 1, -1, 0));
        if (spec.family() == Family::C) forms.push_back(unit(a, 2, -1, 0));
    }
    std::vector<Root> roots;
    roots.reserve(forms.size());
    for (const auto& f : forms) roots.push_back(from_orthogonal(spec, f));
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.coeffs < y.coeffs; });
    return roots;
}

std::vector<int> support(const Root& root) {
    std::vector<int> s;
    for (std::size_t i = 0; i < root.coeffs.size(); ++i)
        if (root.coeffs[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

Rational evaluate(const Root& root, std::span<const Rational> values) {
    if (values.size() != root.coeffs.size())
        throw Error(ErrorCode::LengthMismatch, "evaluate: value vector length " + std::to_string(values.size()) +
                                                   " does not match rank " + std::to_string(root.coeffs.size()));
    Rational acc = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (root.coeffs[i] != 0) acc += root.coeffs[i] * values[i];
    if (root.sign == RootSign::Negative) acc = -acc;
    return acc;
}

long long positive_root_count(Family kind, int size) noexcept {
    const long long k = size;
    return kind == Family::A ? k * (k + 1) / 2 : k * k;
}

}  // namespace seaweed
