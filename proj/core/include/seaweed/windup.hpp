#pragma once

#include <cstdint>
#include <tuple>
#include <string>
#include <vector>

#include "seaweed/seaweed.hpp"

namespace seaweed {

/// M_n(a_1, ..., a_m | b_1, ..., b_t); one side sums to n, the other to at most n.
struct MeanderState {
    Family family = Family::C;
    int rank = 1;
    Composition a;
    Composition b;

    bool operator==(const MeanderState&) const = default;
    auto operator<=>(const MeanderState& o) const {
        return std::tie(family, rank, a.parts, b.parts) <=> std::tie(o.family, o.rank, o.a.parts, o.b.parts);
    }
};

std::string to_string(const MeanderState& s);  // "C4(2,1,1|1)"

enum class MoveKind { BlockCreation, RotationExpansion, PureExpansion, FlipUp };

inline constexpr MoveKind kAllMoves[] = {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                                         MoveKind::PureExpansion, MoveKind::FlipUp};

std::string_view to_string(MoveKind k) noexcept;
MoveKind move_from_string(std::string_view name);

/// Record of one applied move and the rank it was applied at.
struct Move {
    MoveKind kind = MoveKind::BlockCreation;
    int rank_before = 0;

    bool operator==(const Move&) const = default;
};

/// (1^q | empty). Type A only has the base q = 1.
MeanderState base(int q, Family family);

bool move_applicable(const MeanderState& s, MoveKind k) noexcept;
/// Throws PreconditionViolated naming the failed guard.
MeanderState apply_move(const MeanderState& s, MoveKind k);

struct Walk {
    MeanderState state;
    std::vector<Move> log;
};

/// `steps` moves sampled uniformly among the applicable ones, seeded.
Walk random_walk(int q, Family family, int steps, std::uint64_t seed);
/// Re-applies a move log from base(q, family). Throws PreconditionViolated or
/// InvalidArgument when the log does not fit.
MeanderState replay(int q, Family family, const std::vector<Move>& log);

Seaweed to_seaweed(const MeanderState& s);
/// Inverse of to_seaweed for seaweeds with sum(a) = n or sum(b) = n (swapping
/// the sides in the second case). Throws InvalidArgument otherwise.
MeanderState normalized_state(const Seaweed& s);

/// [{"move":"BlockCreation","rank":3}, ...]
std::string move_log_to_json(const std::vector<Move>& log);
std::vector<Move> move_log_from_json(const std::string& text);

/// Every state of rank <= max_rank reachable from the bases q = 1..max_rank
/// by moves that stay within the rank bound; sorted and deduplicated.
std::vector<MeanderState> reachable_states(Family family, int max_rank);

}  // namespace seaweed
