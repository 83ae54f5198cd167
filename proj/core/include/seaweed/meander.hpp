#pragma once

#include <string>
#include <vector>

#include "seaweed/seaweed.hpp"

namespace seaweed {

enum class TurnDirection { Left, Right };

std::string_view to_string(TurnDirection d) noexcept;

/// An involution arc joining Dynkin-adjacent indices inside one component.
struct UTurn {
    int from = 0;  // traversal order from the orbit anchor
    int to = 0;
    Side side = Side::Top;
    TurnDirection direction = TurnDirection::Left;

    bool operator==(const UTurn&) const = default;
};

struct Orbit {
    std::vector<int> members;  // path order starting at the anchor
    std::vector<UTurn> uturns;
    bool cyclic = false;
};

/// Split Dynkin diagram with the two involutions i1 (top) and i2 (bottom).
/// i_j reverses every type-A component of pi_j and fixes B/C components and
/// everything outside pi_j.
class OrbitMeander {
public:
    explicit OrbitMeander(Seaweed seaweed);

    const Seaweed& seaweed() const noexcept { return seaweed_; }
    int rank() const noexcept { return seaweed_.rank(); }

    int i1(int index) const { return map1_[static_cast<std::size_t>(index)]; }
    int i2(int index) const { return map2_[static_cast<std::size_t>(index)]; }
    int involution(Side side, int index) const { return side == Side::Top ? i1(index) : i2(index); }

    const std::vector<Component>& top_components() const noexcept { return top_; }
    const std::vector<Component>& bottom_components() const noexcept { return bottom_; }
    const Component* component_of(Side side, int index) const;

private:
    Seaweed seaweed_;
    std::vector<Component> top_;
    std::vector<Component> bottom_;
    std::vector<int> map1_;  // 1-based, slot 0 unused
    std::vector<int> map2_;
};

OrbitMeander build_meander(const Seaweed& s);

/// Connected components of the graph whose edges are the non-trivial i1 and
/// i2 pairs; each path is listed from its anchor (see detect_uturns).
std::vector<Orbit> orbits(const OrbitMeander& m);

/// Pi \ (pi1 intersect pi2), ascending.
std::vector<int> pi_union(const Seaweed& s);

struct OrbitCount {
    std::vector<int> members;
    int pi_union_count = 0;
};

struct FrobeniusWitness {
    bool frobenius = false;
    std::vector<OrbitCount> orbits;
};

/// Frobenius iff every orbit meets pi_union exactly once.
FrobeniusWitness is_frobenius(const OrbitMeander& m);

/// U-turns met while walking the orbit from members.front(). Direction: a top
/// arc from v_i to v_{i+1} or a bottom arc from v_i to v_{i-1} turns right;
/// the mirror cases turn left.
std::vector<UTurn> detect_uturns(const Orbit& orbit, const OrbitMeander& m);

enum class RenderFormat { Ascii, Tikz };

RenderFormat render_format_from_string(const std::string& name);
std::string render(const OrbitMeander& m, RenderFormat format);

}  // namespace seaweed
