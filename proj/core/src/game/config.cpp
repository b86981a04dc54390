#include "parlor/game/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "parlor/errors.hpp"

namespace parlor::game {

DiceSpec DiceSpec::uniform(int count, int sides) {
    DiceSpec d;
    d.count = count;
    d.sides = sides;
    d.weights.assign(static_cast<std::size_t>(sides), 1.0 / sides);
    return d;
}

bool DiceSpec::deterministic() const {
    int live = 0;
    for (double w : weights)
        if (w > 0.0) ++live;
    return live == 1;
}

int DiceSpec::min_total() const {
    for (int f = 0; f < sides; ++f)
        if (weights[static_cast<std::size_t>(f)] > 0.0) return count * (f + 1);
    return count;
}

int DiceSpec::max_total() const {
    for (int f = sides - 1; f >= 0; --f)
        if (weights[static_cast<std::size_t>(f)] > 0.0) return count * (f + 1);
    return count * sides;
}

std::vector<double> DiceSpec::total_distribution() const {
    // dist[t] = P(total == t), t in [0, count*sides]
    std::vector<double> dist(static_cast<std::size_t>(count * sides + 1), 0.0);
    dist[0] = 1.0;
    for (int d = 0; d < count; ++d) {
        std::vector<double> next(dist.size(), 0.0);
        for (std::size_t t = 0; t < dist.size(); ++t) {
            if (dist[t] == 0.0) continue;
            for (int f = 1; f <= sides; ++f) {
                double w = weights[static_cast<std::size_t>(f - 1)];
                if (w == 0.0) continue;
                std::size_t nt = t + static_cast<std::size_t>(f);
                if (nt < next.size()) next[nt] += dist[t] * w;
            }
        }
        dist = std::move(next);
    }
    return dist;
}

void GameConfig::validate() const {
    if (board_size < 4) throw ConfigError("board_size must be at least 4");
    if (num_players < 2 || num_players > 4)
        throw ConfigError("num_players must be in [2, 4]");
    if (starting_cash < 0) throw ConfigError("starting_cash must be >= 0");
    if (go_salary < 0) throw ConfigError("go_salary must be >= 0");
    if (tax_amount < 0) throw ConfigError("tax_amount must be >= 0");
    if (jail.fine < 0) throw ConfigError("jail fine must be >= 0");
    if (jail.max_turns_held < 1) throw ConfigError("jail max_turns_held must be >= 1");
    if (max_turns < 1) throw ConfigError("max_turns must be >= 1");
    if (house_rent_bonus < 0) throw ConfigError("house_rent_bonus must be >= 0");
    if (heuristic_reserve < 0) throw ConfigError("heuristic_reserve must be >= 0");

    if (dice.count < 1) throw ConfigError("dice count must be >= 1");
    if (dice.sides < 1) throw ConfigError("dice sides must be >= 1");
    if (static_cast<int>(dice.weights.size()) != dice.sides)
        throw ConfigError("dice weights size must equal sides");
    double sum = 0.0;
    for (double w : dice.weights) {
        if (w < 0.0) throw ConfigError("dice weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("dice weights must sum to 1 within 1e-9");

    auto special_in_range = [&](int p, const char* what) {
        if (p < 0 || p >= board_size)
            throw ConfigError(std::string(what) + " position out of board range");
    };
    special_in_range(go_position, "go");
    special_in_range(jail_position, "jail");
    special_in_range(tax_position, "tax");
    special_in_range(go_to_jail_position, "go_to_jail");
    std::set<int> special{go_position, jail_position, tax_position, go_to_jail_position};
    if (special.size() != 4)
        throw ConfigError("go/jail/tax/go_to_jail squares must be distinct");

    std::set<int> positions;
    std::set<std::string> names;
    for (const auto& p : properties) {
        if (p.name.empty()) throw ConfigError("property name must be non-empty");
        if (!names.insert(p.name).second)
            throw ConfigError("duplicate property name: " + p.name);
        if (p.price < 0) throw ConfigError("property price must be >= 0: " + p.name);
        if (p.rent < 0) throw ConfigError("property rent must be >= 0: " + p.name);
        if (p.position < 0 || p.position >= board_size)
            throw ConfigError("property position out of board range: " + p.name);
        if (special.count(p.position))
            throw ConfigError("property placed on a special square: " + p.name);
        if (!positions.insert(p.position).second)
            throw ConfigError("duplicate property position: " + p.name);
    }
}

SquareKind GameConfig::square_kind(int position) const {
    if (position == go_position) return SquareKind::Go;
    if (position == jail_position) return SquareKind::Jail;
    if (position == tax_position) return SquareKind::Tax;
    if (position == go_to_jail_position) return SquareKind::GoToJail;
    return SquareKind::Property;
}

int GameConfig::property_at(int position) const {
    for (std::size_t i = 0; i < properties.size(); ++i)
        if (properties[i].position == position) return static_cast<int>(i);
    return -1;
}

Money GameConfig::house_cost(int property_index) const {
    return properties[static_cast<std::size_t>(property_index)].price / 2;
}

Money GameConfig::mortgage_value(int property_index) const {
    return properties[static_cast<std::size_t>(property_index)].price / 2;
}

Money GameConfig::unmortgage_cost(int property_index) const {
    Money v = mortgage_value(property_index);
    return v + v / 10;
}

Money GameConfig::rent_due(int property_index, int houses) const {
    const auto& p = properties[static_cast<std::size_t>(property_index)];
    return p.rent + house_rent_bonus * houses;
}

Money GameConfig::smallest_nonzero_rent() const {
    Money best = 0;
    for (const auto& p : properties)
        if (p.rent > 0 && (best == 0 || p.rent < best)) best = p.rent;
    return best;
}

bool GameConfig::color_group_complete(int property_index, int owner,
                                      const std::vector<int>& owners) const {
    const auto& color = properties[static_cast<std::size_t>(property_index)].color;
    for (std::size_t i = 0; i < properties.size(); ++i)
        if (properties[i].color == color && owners[i] != owner) return false;
    return true;
}

GameConfig GameConfig::standard() {
    GameConfig c;
    // 20 properties on the 20 non-special squares, in board order.
    static const char* kNames[20] = {
        "alder_ave",   "birch_lane",  "cedar_row",    "dogwood_ct",  "elm_st",
        "fir_walk",    "hazel_dr",    "juniper_pl",   "laurel_way",  "maple_ave",
        "oak_st",      "pine_rd",     "rowan_ct",     "spruce_ln",   "walnut_st",
        "willow_way",  "aspen_ridge", "beech_hill",   "chestnut_sq", "magnolia_blvd"};
    static const char* kColors[5] = {"sienna", "teal", "coral", "amber", "indigo"};
    static const Money kPrices[20] = {60,  60,  80,  80,  100, 100, 120, 120, 140, 140,
                                      160, 160, 180, 200, 220, 240, 240, 260, 280, 280};
    // Base rents stay under twice the smallest rent except the indigo
    // group, whose premium flat rent drives the endgame.
    static const Money kRents[20] = {150, 152, 154, 156, 158, 160, 162, 164, 166, 168,
                                     170, 172, 176, 180, 184, 188, 450, 450, 450, 450};
    int prop = 0;
    for (int pos = 0; pos < c.board_size; ++pos) {
        if (pos == c.go_position || pos == c.jail_position || pos == c.tax_position ||
            pos == c.go_to_jail_position)
            continue;
        PropertySpec p;
        p.name = kNames[prop];
        p.color = kColors[prop / 4];
        p.price = kPrices[prop];
        p.rent = kRents[prop];
        p.position = pos;
        c.properties.push_back(std::move(p));
        ++prop;
    }
    c.validate();
    return c;
}

} // namespace parlor::game
