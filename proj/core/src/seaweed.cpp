#include "seaweed/seaweed.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "seaweed/errors.hpp"

namespace seaweed {

std::string_view to_string(Side side) noexcept { return side == Side::Top ? "top" : "bottom"; }

std::vector<int> Component::indices() const {
    std::vector<int> out;
    for (int i = hi; i >= lo; --i) out.push_back(i);
    return out;
}

int Composition::sum() const noexcept {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

namespace {

std::vector<int> normalise(std::vector<int> v, int n, const char* which) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int i : v) {
        if (i < 1 || i > n) {
            throw Error(ErrorCode::InvalidArgument, std::string(which) + " contains index " + std::to_string(i) +
                                                        " outside 1.." + std::to_string(n));
        }
    }
    return v;
}

std::vector<int> complement_of_phi(const Composition& a, int n, const char* which) {
    std::vector<char> removed(static_cast<std::size_t>(n + 1), 0);
    int partial = 0;
    for (int p : a.parts) {
        if (p < 1) throw Error(ErrorCode::InvalidArgument, std::string(which) + ": composition parts must be positive");
        partial += p;
        if (partial > n) {
            throw Error(ErrorCode::InvalidArgument, std::string(which) + ": composition sum exceeds rank " +
                                                        std::to_string(n));
        }
        removed[static_cast<std::size_t>(n + 1 - partial)] = 1;
    }
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (!removed[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

Composition composition_of(const std::vector<char>& mask, int n) {
    // Gaps are the excluded indices read from alpha_n down to alpha_1.
    Composition c;
    int last = 0;
    for (int i = n; i >= 1; --i) {
        if (mask[static_cast<std::size_t>(i)]) continue;
        const int partial = n + 1 - i;
        c.parts.push_back(partial - last);
        last = partial;
    }
    return c;
}

std::string join_desc(const std::vector<int>& ascending) {
    std::string out;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += std::to_string(*it);
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view text, const std::string& key) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::ParseError, "bad integer '" + std::string(item) + "' in " + key + "=");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Seaweed::Seaweed(RootSystemSpec spec, std::vector<int> pi1, std::vector<int> pi2)
    : spec_(spec),
      pi1_(std::move(pi1)),
      pi2_(std::move(pi2)),
      mask1_(static_cast<std::size_t>(spec.rank() + 1), 0),
      mask2_(static_cast<std::size_t>(spec.rank() + 1), 0) {
    for (int i : pi1_) mask1_[static_cast<std::size_t>(i)] = 1;
    for (int i : pi2_) mask2_[static_cast<std::size_t>(i)] = 1;
}

Seaweed Seaweed::from_subsets(RootSystemSpec spec, std::vector<int> pi1, std::vector<int> pi2) {
    const int n = spec.rank();
    Seaweed s(spec, normalise(std::move(pi1), n, "pi1"), normalise(std::move(pi2), n, "pi2"));
    std::vector<int> missing;
    for (int i = n; i >= 1; --i)
        if (!s.in_top(i) && !s.in_bottom(i)) missing.push_back(i);
    if (!missing.empty()) {
        std::string list;
        for (int i : missing) list += (list.empty() ? "" : ",") + std::to_string(i);
        throw Error(ErrorCode::UnionNotFull,
                    "pi1 and pi2 must cover every simple root; missing {" + list +
                        "}. Such a seaweed splits as a direct sum of smaller seaweeds, which is not supported");
    }
    return s;
}

Seaweed Seaweed::from_compositions(RootSystemSpec spec, const Composition& a, const Composition& b) {
    const int n = spec.rank();
    return from_subsets(spec, complement_of_phi(a, n, "a"), complement_of_phi(b, n, "b"));
}

std::pair<Composition, Composition> to_compositions(const Seaweed& s) {
    std::vector<char> m1(static_cast<std::size_t>(s.rank() + 1), 0), m2 = m1;
    for (int i : s.top()) m1[static_cast<std::size_t>(i)] = 1;
    for (int i : s.bottom()) m2[static_cast<std::size_t>(i)] = 1;
    return {composition_of(m1, s.rank()), composition_of(m2, s.rank())};
}

std::vector<Component> components(const Seaweed& s, Side side) {
    std::vector<Component> out;
    const int n = s.rank();
    int i = n;
    while (i >= 1) {
        if (!s.in_side(side, i)) {
            --i;
            continue;
        }
        const int hi = i;
        while (i >= 1 && s.in_side(side, i)) --i;
        const int lo = i + 1;
        Family kind = Family::A;
        if (lo == 1 && s.spec().family() != Family::A) kind = s.spec().family();
        out.push_back(Component{side, lo, hi, kind});
    }
    return out;
}

std::vector<Component> all_components(const Seaweed& s) {
    auto out = components(s, Side::Top);
    auto bottom = components(s, Side::Bottom);
    out.insert(out.end(), bottom.begin(), bottom.end());
    return out;
}

long long dimension(const Seaweed& s) {
    long long dim = s.rank();
    for (const auto& c : all_components(s)) dim += positive_root_count(c.kind, c.size());
    return dim;
}

Seaweed parse_seaweed_literal(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    if (!(in >> head) || head.size() < 2) throw Error(ErrorCode::ParseError, "expected '<family><rank>' such as C8");
    Family family;
    try {
        family = family_from_char(head[0]);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    int rank = 0;
    auto [ptr, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), rank);
    if (ec != std::errc() || ptr != head.data() + head.size() || rank < 1)
        throw Error(ErrorCode::ParseError, "bad rank in '" + head + "'");

    std::optional<std::vector<int>> top, bottom, a, b;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        auto values = parse_int_list(std::string_view(token).substr(eq + 1), key);
        std::optional<std::vector<int>>* slot = nullptr;
        if (key == "top") slot = &top;
        else if (key == "bottom") slot = &bottom;
        else if (key == "a") slot = &a;
        else if (key == "b") slot = &b;
        else throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
        if (slot->has_value()) throw Error(ErrorCode::ParseError, "duplicate key '" + key + "'");
        *slot = std::move(values);
    }

    const RootSystemSpec spec(family, rank);
    const bool subsets = top || bottom;
    const bool comps = a || b;
    if (subsets == comps) throw Error(ErrorCode::ParseError, "give either top=/bottom= or a=/b=");
    try {
        if (subsets) return Seaweed::from_subsets(spec, top.value_or(std::vector<int>{}), bottom.value_or(std::vector<int>{}));
        return Seaweed::from_compositions(spec, Composition{a.value_or(std::vector<int>{})},
                                          Composition{b.value_or(std::vector<int>{})});
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::ParseError, e.what());
        throw;
    }
}

std::string to_literal(const Seaweed& s) {
    return s.spec().name() + " top=" + join_desc(s.top()) + " bottom=" + join_desc(s.bottom());
}

std::string to_composition_literal(const Seaweed& s) {
    const auto [a, b] = to_compositions(s);
    return s.spec().name() + " a=" + join(a.parts) + " b=" + join(b.parts);
}

}  // namespace seaweed
