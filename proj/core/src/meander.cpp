#include "seaweed/meander.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "seaweed/errors.hpp"

namespace seaweed {

std::string_view to_string(TurnDirection d) noexcept { return d == TurnDirection::Left ? "left" : "right"; }

OrbitMeander::OrbitMeander(Seaweed seaweed)
    : seaweed_(std::move(seaweed)),
      top_(components(seaweed_, Side::Top)),
      bottom_(components(seaweed_, Side::Bottom)),
      map1_(static_cast<std::size_t>(seaweed_.rank() + 1)),
      map2_(static_cast<std::size_t>(seaweed_.rank() + 1)) {
    for (int i = 0; i <= rank(); ++i) {
        map1_[static_cast<std::size_t>(i)] = i;
        map2_[static_cast<std::size_t>(i)] = i;
    }
    auto fill = [](std::vector<int>& map, const std::vector<Component>& comps) {
        for (const auto& c : comps) {
            if (c.kind != Family::A) continue;  // longest element is -id on B/C pieces
            for (int i = c.lo; i <= c.hi; ++i) map[static_cast<std::size_t>(i)] = c.lo + c.hi - i;
        }
    };
    fill(map1_, top_);
    fill(map2_, bottom_);
}

const Component* OrbitMeander::component_of(Side side, int index) const {
    const auto& comps = side == Side::Top ? top_ : bottom_;
    for (const auto& c : comps)
        if (c.contains(index)) return &c;
    return nullptr;
}

OrbitMeander build_meander(const Seaweed& s) { return OrbitMeander(s); }

std::vector<int> pi_union(const Seaweed& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.rank(); ++i)
        if (!(s.in_top(i) && s.in_bottom(i))) out.push_back(i);
    return out;
}

namespace {

bool in_both(const Seaweed& s, int i) { return s.in_top(i) && s.in_bottom(i); }

int degree(const OrbitMeander& m, int v) { return (m.i1(v) != v ? 1 : 0) + (m.i2(v) != v ? 1 : 0); }

UTurn classify(int from, int to, Side side) {
    TurnDirection d;
    if (side == Side::Top) d = to == from + 1 ? TurnDirection::Right : TurnDirection::Left;
    else d = to == from - 1 ? TurnDirection::Right : TurnDirection::Left;
    return UTurn{from, to, side, d};
}

}  // namespace

std::vector<UTurn> detect_uturns(const Orbit& orbit, const OrbitMeander& m) {
    std::vector<UTurn> out;
    if (orbit.members.empty()) return out;
    auto check = [&](int from, int to, Side side) {
        if (std::abs(from - to) == 1) out.push_back(classify(from, to, side));
    };
    if (!orbit.cyclic) {
        const int start = orbit.members.front();
        Side side = m.i1(start) != start ? Side::Top : Side::Bottom;
        for (std::size_t k = 0; k + 1 < orbit.members.size(); ++k) {
            const int from = orbit.members[k];
            const int to = orbit.members[k + 1];
            if (m.involution(side, from) != to) side = side == Side::Top ? Side::Bottom : Side::Top;
            check(from, to, side);
            side = side == Side::Top ? Side::Bottom : Side::Top;
        }
        return out;
    }
    // Cycle of the pair graph: walk it once starting with the i2 arc, keeping
    // arcs that leave a member of this orbit.
    std::vector<char> member(static_cast<std::size_t>(m.rank() + 1), 0);
    for (int v : orbit.members) member[static_cast<std::size_t>(v)] = 1;
    const int start = orbit.members.front();
    int cur = start;
    Side side = Side::Bottom;
    do {
        const int next = m.involution(side, cur);
        if (member[static_cast<std::size_t>(cur)]) check(cur, next, side);
        cur = next;
        side = side == Side::Top ? Side::Bottom : Side::Top;
    } while (cur != start || side != Side::Bottom);
    return out;
}

std::vector<Orbit> orbits(const OrbitMeander& m) {
    const Seaweed& s = m.seaweed();
    const int n = m.rank();
    std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
    std::vector<Orbit> out;
    for (int v = n; v >= 1; --v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        // Collect the connected component of v.
        std::vector<int> comp{v};
        seen[static_cast<std::size_t>(v)] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (int w : {m.i1(comp[k]), m.i2(comp[k])}) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::vector<int> ends;
        for (int w : comp)
            if (degree(m, w) < 2) ends.push_back(w);

        if (ends.empty()) {
            // A cycle splits into the orbits of the composite map i1 i2.
            std::sort(comp.rbegin(), comp.rend());
            std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
            for (int x : comp) {
                if (taken[static_cast<std::size_t>(x)]) continue;
                Orbit o;
                o.cyclic = true;
                int y = x;
                do {
                    taken[static_cast<std::size_t>(y)] = 1;
                    o.members.push_back(y);
                    y = m.i1(m.i2(y));
                } while (y != x);
                o.uturns = detect_uturns(o, m);
                out.push_back(std::move(o));
            }
            continue;
        }

        // Path: anchor at an endpoint in pi1 ∩ pi2 when there is one.
        std::sort(ends.begin(), ends.end(), [&](int a, int b) {
            const bool ia = in_both(s, a), ib = in_both(s, b);
            if (ia != ib) return ia;
            return a > b;
        });
        Orbit o;
        int cur = ends.front();
        int prev = 0;
        Side side = m.i1(cur) != cur ? Side::Top : Side::Bottom;
        o.members.push_back(cur);
        while (true) {
            const int next = m.involution(side, cur);
            if (next == cur || next == prev) break;
            o.members.push_back(next);
            prev = cur;
            cur = next;
            side = side == Side::Top ? Side::Bottom : Side::Top;
        }
        o.uturns = detect_uturns(o, m);
        out.push_back(std::move(o));
    }
    return out;
}

FrobeniusWitness is_frobenius(const OrbitMeander& m) {
    const Seaweed& s = m.seaweed();
    FrobeniusWitness w;
    w.frobenius = true;
    for (const auto& o : orbits(m)) {
        OrbitCount c{o.members, 0};
        for (int v : o.members)
            if (!in_both(s, v)) ++c.pi_union_count;
        if (c.pi_union_count != 1) w.frobenius = false;
        w.orbits.push_back(std::move(c));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Rendering

RenderFormat render_format_from_string(const std::string& name) {
    if (name == "ascii") return RenderFormat::Ascii;
    if (name == "tikz") return RenderFormat::Tikz;
    throw Error(ErrorCode::UnsupportedFormat, "unknown render format '" + name + "' (expected ascii or tikz)");
}

namespace {

struct Arc {
    int left;   // column of the higher index (drawn further left)
    int right;
    int level = 1;
};

constexpr int kGutter = 8;
constexpr int kStep = 4;

int column_of(int n, int index) { return kGutter + kStep * (n - index); }

std::vector<Arc> arcs_for(const OrbitMeander& m, Side side) {
    std::vector<Arc> arcs;
    const int n = m.rank();
    for (int i = n; i >= 1; --i) {
        const int j = m.involution(side, i);
        if (j < i) arcs.push_back(Arc{column_of(n, i), column_of(n, j)});
    }
    // Nesting depth: one more than the deepest arc strictly inside.
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.right - a.left < b.right - b.left; });
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        for (std::size_t t = 0; t < k; ++t)
            if (arcs[t].left > arcs[k].left && arcs[t].right < arcs[k].right)
                arcs[k].level = std::max(arcs[k].level, arcs[t].level + 1);
    }
    return arcs;
}

std::string arc_row(const std::vector<Arc>& arcs, int level, std::size_t width) {
    std::string row(width, ' ');
    for (const auto& a : arcs) {
        if (a.level == level) {
            for (int c = a.left; c <= a.right; ++c) row[static_cast<std::size_t>(c)] = '-';
            row[static_cast<std::size_t>(a.left)] = '+';
            row[static_cast<std::size_t>(a.right)] = '+';
        } else if (a.level > level) {
            row[static_cast<std::size_t>(a.left)] = '|';
            row[static_cast<std::size_t>(a.right)] = '|';
        }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    return row;
}

std::string vertex_row(const OrbitMeander& m, Side side, std::size_t width) {
    const Seaweed& s = m.seaweed();
    const int n = m.rank();
    std::string row(width, ' ');
    const std::string label = side == Side::Top ? "top" : "bottom";
    row.replace(0, label.size(), label);
    for (int i = n; i >= 1; --i) row[static_cast<std::size_t>(column_of(n, i))] = s.in_side(side, i) ? '*' : 'o';
    for (int i = n; i >= 2; --i) {
        if (!(s.in_side(side, i) && s.in_side(side, i - 1))) continue;
        const auto c = static_cast<std::size_t>(column_of(n, i));
        std::string edge = "---";
        if (i == 2 && s.spec().family() == Family::C) edge = "<==";  // arrow points at the short root
        if (i == 2 && s.spec().family() == Family::B) edge = "==>";
        row.replace(c + 1, 3, edge);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    return row;
}

std::string render_ascii(const OrbitMeander& m) {
    const int n = m.rank();
    const std::size_t width = static_cast<std::size_t>(column_of(n, 1) + 1);
    std::ostringstream out;
    out << to_literal(m.seaweed()) << '\n';

    const auto top = arcs_for(m, Side::Top);
    int top_levels = 0;
    for (const auto& a : top) top_levels = std::max(top_levels, a.level);
    for (int level = top_levels; level >= 1; --level) out << arc_row(top, level, width) << '\n';
    out << vertex_row(m, Side::Top, width) << '\n';

    std::string labels(width + 2, ' ');
    for (int i = n; i >= 1; --i) {
        const std::string t = std::to_string(i);
        labels.replace(static_cast<std::size_t>(column_of(n, i)), t.size(), t);
    }
    while (!labels.empty() && labels.back() == ' ') labels.pop_back();
    out << labels << '\n';

    out << vertex_row(m, Side::Bottom, width) << '\n';
    const auto bottom = arcs_for(m, Side::Bottom);
    int bottom_levels = 0;
    for (const auto& a : bottom) bottom_levels = std::max(bottom_levels, a.level);
    for (int level = 1; level <= bottom_levels; ++level) out << arc_row(bottom, level, width) << '\n';
    return out.str();
}

std::string render_tikz(const OrbitMeander& m) {
    const Seaweed& s = m.seaweed();
    const int n = m.rank();
    auto x = [n](int i) { return n + 1 - i; };
    std::ostringstream out;
    out << "% " << to_literal(s) << '\n';
    out << "% requires \\usetikzlibrary{decorations.markings,arrows}\n";
    out << "\\begin{tikzpicture}\n"
        << "[decoration={markings,mark=at position 0.6 with {\\arrow{angle 90}{>}}}]\n";
    for (const auto& [side, y, suffix] : {std::tuple{Side::Top, ".75", '+'}, std::tuple{Side::Bottom, "0", '-'}}) {
        for (int i = n; i >= 1; --i) {
            out << "\\draw (" << x(i) << ',' << y << ") node[draw,circle,fill=" << (s.in_side(side, i) ? "black" : "white")
                << ",minimum size=5pt,inner sep=0pt] (" << x(i) << suffix << ") {};\n";
        }
    }
    for (const auto& [side, suffix] : {std::pair{Side::Top, '+'}, std::pair{Side::Bottom, '-'}}) {
        for (int i = n; i >= 2; --i) {
            if (!(s.in_side(side, i) && s.in_side(side, i - 1))) continue;
            if (i == 2 && s.spec().family() != Family::A) {
                // Arrow towards the short simple root: alpha_2 in C, alpha_1 in B.
                const bool toward_alpha2 = s.spec().family() == Family::C;
                const int from = toward_alpha2 ? x(1) : x(2);
                const int to = toward_alpha2 ? x(2) : x(1);
                out << "\\draw [double distance=.8mm,postaction={decorate}] (" << from << suffix << ") to (" << to
                    << suffix << ");\n";
            } else {
                out << "\\draw (" << x(i) << suffix << ") to (" << x(i - 1) << suffix << ");\n";
            }
        }
    }
    for (const auto& [side, suffix, bend] :
         {std::tuple{Side::Top, '+', "bend left=60"}, std::tuple{Side::Bottom, '-', "bend right=60"}}) {
        for (int i = n; i >= 1; --i) {
            const int j = m.involution(side, i);
            if (j >= i) continue;
            out << "\\draw [dashed] (" << x(i) << suffix << ") to [" << bend << "] (" << x(j) << suffix << ");\n";
        }
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace

std::string render(const OrbitMeander& m, RenderFormat format) {
    switch (format) {
        case RenderFormat::Ascii: return render_ascii(m);
        case RenderFormat::Tikz: return render_tikz(m);
    }
    throw Error(ErrorCode::UnsupportedFormat, "unsupported render format");
}

}  // namespace seaweed
