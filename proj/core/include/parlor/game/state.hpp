#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "parlor/game/config.hpp"

namespace parlor::game {

enum class ActionKind : std::uint8_t {
    RollAndMove = 0,
    Buy,
    Skip,
    PayJailFine,
    Mortgage,
    Unmortgage,
    BuildHouse,
    EndTurn,
};
inline constexpr int kActionKinds = 8;

const char* action_name(ActionKind k);
ActionKind action_from_name(const std::string& name);

struct Action {
    ActionKind kind = ActionKind::EndTurn;
    int target = -1; // property index for Mortgage/Unmortgage/BuildHouse

    bool operator==(const Action&) const = default;
};

enum class EventKind : std::uint8_t {
    DiceRolled,
    Moved,
    PassedGo,
    RentPaid,
    TaxPaid,
    PropertyBought,
    Mortgaged,
    Unmortgaged,
    AutoMortgaged,
    HouseBuilt,
    WentToJail,
    StayedInJail,
    PaidJailFine,
    ReleasedFromJail,
    Bankrupt,
    GameOver,
};

const char* event_name(EventKind k);

struct Event {
    EventKind kind;
    int player = -1;
    int property = -1; // also used for square index on movement events
    Money amount = 0;
};

enum class TurnPhase : std::uint8_t {
    PreRoll = 0, // movement (or jail resolution) still pending
    Manage = 1,  // movement done; buy window / property management / end turn
};

struct PlayerState {
    Money cash = 0;
    int position = 0;
    bool in_jail = false;
    int jail_turns = 0;
    bool bankrupt = false;

    bool operator==(const PlayerState&) const = default;
};

struct PropertyState {
    int owner = -1; // player index, -1 = unowned
    bool mortgaged = false;
    int houses = 0; // 0..5

    bool operator==(const PropertyState&) const = default;
};

struct GameState {
    int turn = 0; // player-turns completed
    int current_player = 0;
    TurnPhase phase = TurnPhase::PreRoll;
    bool buy_window_open = false;
    std::vector<PlayerState> players;
    std::vector<PropertyState> properties;
    std::vector<int> last_roll; // faces of the most recent dice roll
    std::uint64_t rng_state = 0;

    bool operator==(const GameState&) const = default;
};

} // namespace parlor::game
