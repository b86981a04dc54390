#pragma once

#include <vector>

#include "parlor/game/state.hpp"

namespace parlor::game {

// What the acting player can see after a step. Two layers:
//
//  * a dynamic core (cash, positions, ownership, dice, event tags) that is
//    the input vector for policy networks, and
//  * a deed layer (price, rent, color, board position of each square) read
//    off the live board, consumed by the knowledge-graph extractor but NOT
//    part of the policy vector. Policies that want this information must
//    get it through the graph pathway.
struct PlayerView {
    Money cash = 0;
    int position = 0;
    bool in_jail = false;
    int jail_turns = 0;
    bool bankrupt = false;
};

struct PropertyView {
    int owner = -1;
    bool mortgaged = false;
    int houses = 0;
    bool deed_exposed = true; // deed values below are only valid when true
    Money price = 0;
    Money rent = 0;
    int color_id = 0;
    int position = -1;
};

struct BoardView {
    int go_position = 0;
    Money go_salary = 0;
    int jail_position = 0;
    Money jail_fine = 0;
    int tax_position = 0;
    Money tax_amount = 0;
    int go_to_jail_position = 0;
};

struct Observation {
    int acting_player = 0;
    int turn = 0;
    TurnPhase phase = TurnPhase::PreRoll;
    bool buy_window_open = false;
    std::vector<PlayerView> players;
    std::vector<PropertyView> properties;
    BoardView board;
    std::vector<int> dice_faces;
    int dice_total = 0;
    std::vector<Event> events;

    // Fixed-length numeric encoding of the dynamic core for a fixed config.
    std::vector<double> policy_vec(const GameConfig& config) const;
    static int policy_vec_size(const GameConfig& config);
};

// Deterministic view of `state` for the acting player, tagged with the
// events of the step that produced it.
Observation observe(const GameConfig& config, const GameState& state,
                    const std::vector<Event>& events,
                    const std::vector<bool>& deed_exposed);

} // namespace parlor::game
