#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parlor::game {

using Money = long long; // whole dollars; integer math keeps transfers exact

struct PropertySpec {
    std::string name;       // snake_case entity id, unique
    std::string color;      // color-group id
    Money price = 0;        // purchase price
    Money rent = 0;         // base rent with zero houses
    int position = -1;      // board square index
};

struct DiceSpec {
    int count = 2;
    int sides = 6;
    // Per-face probability weights, size == sides, sum == 1 (within 1e-9).
    std::vector<double> weights;

    static DiceSpec uniform(int count, int sides);
    bool deterministic() const; // exactly one face with nonzero weight
    int min_total() const;
    int max_total() const;
    // Exact probability of each total in [count, count*sides], by convolution.
    std::vector<double> total_distribution() const;
};

struct JailRules {
    Money fine = 50;
    int max_turns_held = 3;
};

enum class SquareKind : std::uint8_t { Go, Jail, Tax, GoToJail, Property };

enum class Visibility : std::uint8_t {
    Full,      // deed values of every property appear in every observation
    LandedOnly // deed values appear only after some player landed on the square
};

struct GameConfig {
    int board_size = 24;
    std::vector<PropertySpec> properties;
    DiceSpec dice = DiceSpec::uniform(2, 6);
    Money starting_cash = 1500;
    Money go_salary = 150;
    Money tax_amount = 100;
    JailRules jail;
    int max_turns = 240; // player-turns before the game is called a draw
    int num_players = 2;
    int go_position = 0;
    int jail_position = 6;
    int tax_position = 12;
    int go_to_jail_position = 18;
    // Rent grows linearly with houses: rent(p, h) = p.rent + house_rent_bonus * h.
    Money house_rent_bonus = 20;
    // Heuristic agent keeps this much cash in reserve before discretionary spending.
    Money heuristic_reserve = 375;
    Visibility visibility = Visibility::Full;

    // Throws ConfigError naming the violated invariant.
    void validate() const;

    SquareKind square_kind(int position) const;
    // Index into properties for a property square, -1 otherwise.
    int property_at(int position) const;
    Money house_cost(int property_index) const; // price / 2
    Money mortgage_value(int property_index) const; // price / 2
    Money unmortgage_cost(int property_index) const; // mortgage value + 10%
    Money rent_due(int property_index, int houses) const;
    Money smallest_nonzero_rent() const;
    bool color_group_complete(int property_index, int owner,
                              const std::vector<int>& owners) const;

    // The stock two-player board: 24 squares, 20 properties in 5 color
    // groups of 4. Group "indigo" carries a premium flat rent.
    static GameConfig standard();
};

} // namespace parlor::game
