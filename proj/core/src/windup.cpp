#include "seaweed/windup.hpp"

#include <json.hpp>

#include <deque>
#include <random>
#include <set>

#include "seaweed/errors.hpp"

namespace seaweed {

namespace {

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

void require(bool ok, const MeanderState& s, MoveKind k, const char* guard) {
    if (!ok) {
        throw Error(ErrorCode::PreconditionViolated,
                    std::string(to_string(k)) + " on " + to_string(s) + " needs " + guard);
    }
}

}  // namespace

std::string to_string(const MeanderState& s) {
    return std::string(1, to_char(s.family)) + std::to_string(s.rank) + "(" + join(s.a.parts) + "|" +
           join(s.b.parts) + ")";
}

std::string_view to_string(MoveKind k) noexcept {
    switch (k) {
        case MoveKind::BlockCreation: return "BlockCreation";
        case MoveKind::RotationExpansion: return "RotationExpansion";
        case MoveKind::PureExpansion: return "PureExpansion";
        case MoveKind::FlipUp: return "FlipUp";
    }
    return "?";
}

MoveKind move_from_string(std::string_view name) {
    for (MoveKind k : kAllMoves)
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::InvalidArgument, "unknown move '" + std::string(name) + "'");
}

MeanderState base(int q, Family family) {
    if (q < 1) throw Error(ErrorCode::InvalidArgument, "base needs q >= 1");
    if (family == Family::A && q != 1) throw Error(ErrorCode::InvalidArgument, "the type-A base is M1(1|)");
    return MeanderState{family, q, Composition{std::vector<int>(static_cast<std::size_t>(q), 1)}, Composition{}};
}

bool move_applicable(const MeanderState& s, MoveKind k) noexcept {
    switch (k) {
        case MoveKind::BlockCreation: return !s.a.parts.empty();
        case MoveKind::RotationExpansion: return !s.b.parts.empty() && !s.a.parts.empty() && s.a.parts[0] > s.b.parts[0];
        case MoveKind::PureExpansion: return s.a.parts.size() >= 2;
        case MoveKind::FlipUp: return true;
    }
    return false;
}

MeanderState apply_move(const MeanderState& s, MoveKind k) {
    const auto& a = s.a.parts;
    const auto& b = s.b.parts;
    MeanderState out{s.family, s.rank, {}, {}};
    switch (k) {
        case MoveKind::BlockCreation:
            require(!a.empty(), s, k, "a nonempty top composition");
            out.rank = s.rank + a[0];
            out.a.parts = a;
            out.a.parts[0] = 2 * a[0];
            out.b.parts = {a[0]};
            out.b.parts.insert(out.b.parts.end(), b.begin(), b.end());
            break;
        case MoveKind::RotationExpansion:
            require(!b.empty(), s, k, "a nonempty bottom composition");
            require(a[0] > b[0], s, k, "a1 > b1");
            out.rank = s.rank + a[0] - b[0];
            out.a.parts = a;
            out.a.parts[0] = 2 * a[0] - b[0];
            out.b.parts = b;
            out.b.parts[0] = a[0];
            break;
        case MoveKind::PureExpansion:
            require(a.size() >= 2, s, k, "at least two top parts");
            out.rank = s.rank + a[1];
            out.a.parts = {a[0] + 2 * a[1]};
            out.a.parts.insert(out.a.parts.end(), a.begin() + 2, a.end());
            out.b.parts = {a[1]};
            out.b.parts.insert(out.b.parts.end(), b.begin(), b.end());
            break;
        case MoveKind::FlipUp:
            out.a = s.b;
            out.b = s.a;
            break;
    }
    return out;
}

Walk random_walk(int q, Family family, int steps, std::uint64_t seed) {
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be >= 0");
    Walk w{base(q, family), {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int step = 0; step < steps; ++step) {
        MoveKind k;
        do {
            k = kAllMoves[pick(rng)];
        } while (!move_applicable(w.state, k));
        w.log.push_back({k, w.state.rank});
        w.state = apply_move(w.state, k);
    }
    return w;
}

MeanderState replay(int q, Family family, const std::vector<Move>& log) {
    MeanderState s = base(q, family);
    for (const auto& m : log) {
        if (m.rank_before != 0 && m.rank_before != s.rank) {
            throw Error(ErrorCode::InvalidArgument, std::string(to_string(m.kind)) + " logged at rank " +
                                                        std::to_string(m.rank_before) + " but replayed at " +
                                                        to_string(s));
        }
        s = apply_move(s, m.kind);
    }
    return s;
}

Seaweed to_seaweed(const MeanderState& s) {
    return Seaweed::from_compositions(RootSystemSpec(s.family, s.rank), s.a, s.b);
}

MeanderState normalized_state(const Seaweed& s) {
    auto [a, b] = to_compositions(s);
    if (a.sum() != s.rank()) std::swap(a, b);
    if (a.sum() != s.rank())
        throw Error(ErrorCode::InvalidArgument, to_literal(s) + " has no side whose composition sums to the rank");
    return MeanderState{s.spec().family(), s.rank(), std::move(a), std::move(b)};
}

std::string move_log_to_json(const std::vector<Move>& log) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : log) out.push_back({{"move", to_string(m.kind)}, {"rank", m.rank_before}});
    return out.dump();
}

std::vector<Move> move_log_from_json(const std::string& text) {
    std::vector<Move> log;
    try {
        const auto doc = nlohmann::json::parse(text);
        if (!doc.is_array()) throw Error(ErrorCode::ParseError, "move log must be a JSON array");
        for (const auto& item : doc) {
            Move m;
            m.kind = move_from_string(item.at("move").get<std::string>());
            m.rank_before = item.value("rank", 0);
            log.push_back(m);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad move log: ") + e.what());
    }
    return log;
}

std::vector<MeanderState> reachable_states(Family family, int max_rank) {
    std::set<MeanderState> seen;
    std::deque<MeanderState> queue;
    const int top_q = family == Family::A ? std::min(max_rank, 1) : max_rank;
    for (int q = 1; q <= top_q; ++q) {
        auto b0 = base(q, family);
        if (seen.insert(b0).second) queue.push_back(b0);
    }
    while (!queue.empty()) {
        const MeanderState s = queue.front();
        queue.pop_front();
        for (MoveKind k : kAllMoves) {
            if (!move_applicable(s, k)) continue;
            MeanderState t = apply_move(s, k);
            if (t.rank > max_rank) continue;
            if (seen.insert(t).second) queue.push_back(std::move(t));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace seaweed
