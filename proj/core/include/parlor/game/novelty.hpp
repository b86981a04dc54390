#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parlor/game/config.hpp"

namespace parlor::game {

enum class NoveltyKind : std::uint8_t {
    SetPrice,
    SetRent,
    RewireBoardOrder,
    ChangeDice,
    ChangeGoSalary,
    ChangeJailFine,
};

const char* novelty_kind_name(NoveltyKind k);
NoveltyKind novelty_kind_from_name(const std::string& name);

// Selects which properties a novelty touches: an explicit list, or a
// seeded random fraction of the board.
struct PropertySelector {
    std::vector<int> explicit_list; // property indices; empty = use fraction
    double fraction = 1.0;          // share of properties, rounded to nearest
    std::uint64_t seed = 0;         // selection seed for the fraction form

    std::vector<int> resolve(int property_count) const;
};

struct NoveltySpec {
    NoveltyKind kind = NoveltyKind::SetPrice;
    PropertySelector targets;
    Money new_value = 0;   // SetPrice / SetRent / ChangeGoSalary / ChangeJailFine
    DiceSpec new_dice;     // ChangeDice
    int activation_turn = 0;
};

// Pure config-to-config mutation; the input is untouched and the result
// satisfies every GameConfig invariant. Throws ConfigError when the
// selector matches nothing.
GameConfig inject_novelty(const GameConfig& config, const NoveltySpec& spec);

} // namespace parlor::game
