#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seaweed/rootsys.hpp"

namespace seaweed {

enum class Side { Top, Bottom };

std::string_view to_string(Side side) noexcept;
inline int sign_of(Side side) noexcept { return side == Side::Top ? 1 : -1; }

/// Maximal run of consecutive indices on one side of the split Dynkin diagram.
struct Component {
    Side side = Side::Top;
    int lo = 1;  // smallest index
    int hi = 1;  // largest index
    Family kind = Family::A;

    int size() const noexcept { return hi - lo + 1; }
    bool contains(int i) const noexcept { return lo <= i && i <= hi; }
    std::vector<int> indices() const;  // descending, as drawn

    bool operator==(const Component&) const = default;
};

/// Sequence of positive parts with sum at most the rank.
struct Composition {
    std::vector<int> parts;

    int sum() const noexcept;
    bool operator==(const Composition&) const = default;
};

class Seaweed {
public:
    /// Throws UnionNotFull when pi1 and pi2 do not cover every simple root.
    static Seaweed from_subsets(RootSystemSpec spec, std::vector<int> pi1, std::vector<int> pi2);
    /// pi1 = Pi \ phi(a), pi2 = Pi \ phi(b), phi(a) = {alpha_{n+1-a1}, alpha_{n+1-(a1+a2)}, ...}.
    static Seaweed from_compositions(RootSystemSpec spec, const Composition& a, const Composition& b);

    const RootSystemSpec& spec() const noexcept { return spec_; }
    int rank() const noexcept { return spec_.rank(); }

    const std::vector<int>& top() const noexcept { return pi1_; }     // ascending
    const std::vector<int>& bottom() const noexcept { return pi2_; }  // ascending
    const std::vector<int>& subset(Side side) const noexcept { return side == Side::Top ? pi1_ : pi2_; }

    bool in_top(int i) const noexcept { return mask1_[static_cast<std::size_t>(i)] != 0; }
    bool in_bottom(int i) const noexcept { return mask2_[static_cast<std::size_t>(i)] != 0; }
    bool in_side(Side side, int i) const noexcept { return side == Side::Top ? in_top(i) : in_bottom(i); }

    bool operator==(const Seaweed& other) const { return spec_ == other.spec_ && pi1_ == other.pi1_ && pi2_ == other.pi2_; }

private:
    Seaweed(RootSystemSpec spec, std::vector<int> pi1, std::vector<int> pi2);

    RootSystemSpec spec_;
    std::vector<int> pi1_;
    std::vector<int> pi2_;
    std::vector<char> mask1_;  // indexed 0..n, slot 0 unused
    std::vector<char> mask2_;
};

std::pair<Composition, Composition> to_compositions(const Seaweed& s);

/// Components of one side in descending index order.
std::vector<Component> components(const Seaweed& s, Side side);
/// Top components followed by bottom components.
std::vector<Component> all_components(const Seaweed& s);

/// n + #{beta > 0 : supp beta in pi1} + #{beta > 0 : supp beta in pi2}.
long long dimension(const Seaweed& s);

/// Parses "C8 top=8,7,6 bottom=8,7" or "C8 a=1,1,5,1 b=4". Values may be empty.
Seaweed parse_seaweed_literal(const std::string& text);
/// Canonical "<family><rank> top=... bottom=..." form, indices descending.
std::string to_literal(const Seaweed& s);
/// "<family><rank> a=... b=..." form.
std::string to_composition_literal(const Seaweed& s);

}  // namespace seaweed
