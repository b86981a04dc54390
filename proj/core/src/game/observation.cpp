#include "parlor/game/observation.hpp"

#include <map>

#include "parlor/errors.hpp"

namespace parlor::game {

namespace {
constexpr double kCashScale = 1000.0;

int color_index(const GameConfig& config, const std::string& color) {
    // Stable ordering: first appearance in property order.
    int idx = 0;
    std::map<std::string, int> seen;
    for (const auto& p : config.properties) {
        if (!seen.count(p.color)) seen[p.color] = idx++;
        if (p.color == color) return seen[p.color];
    }
    return -1;
}
} // namespace

Observation observe(const GameConfig& config, const GameState& state,
                    const std::vector<Event>& events,
                    const std::vector<bool>& deed_exposed) {
    if (deed_exposed.size() != config.properties.size())
        throw SchemaError("deed exposure mask size mismatch");
    Observation o;
    o.acting_player = state.current_player;
    o.turn = state.turn;
    o.phase = state.phase;
    o.buy_window_open = state.buy_window_open;
    o.players.reserve(state.players.size());
    for (const auto& p : state.players)
        o.players.push_back({p.cash, p.position, p.in_jail, p.jail_turns, p.bankrupt});
    o.properties.reserve(state.properties.size());
    for (std::size_t i = 0; i < state.properties.size(); ++i) {
        const auto& ps = state.properties[i];
        const auto& spec = config.properties[i];
        PropertyView v;
        v.owner = ps.owner;
        v.mortgaged = ps.mortgaged;
        v.houses = ps.houses;
        v.deed_exposed = deed_exposed[i];
        if (v.deed_exposed) {
            v.price = spec.price;
            v.rent = spec.rent;
            v.color_id = color_index(config, spec.color);
            v.position = spec.position;
        }
        o.properties.push_back(v);
    }
    o.board = {config.go_position,      config.go_salary,  config.jail_position,
               config.jail.fine,        config.tax_position, config.tax_amount,
               config.go_to_jail_position};
    o.dice_faces = state.last_roll;
    o.dice_total = 0;
    for (int f : state.last_roll) o.dice_total += f;
    o.events = events;
    return o;
}

int Observation::policy_vec_size(const GameConfig& config) {
    return config.num_players * 5 + static_cast<int>(config.properties.size()) * 3 +
           config.num_players /* acting one-hot */ + 4 /* turn, phase, window, dice */ +
           config.dice.count + 8 /* event tags */;
}

std::vector<double> Observation::policy_vec(const GameConfig& config) const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(policy_vec_size(config)));
    for (const auto& p : players) {
        v.push_back(static_cast<double>(p.cash) / kCashScale);
        v.push_back(static_cast<double>(p.position) / config.board_size);
        v.push_back(p.in_jail ? 1.0 : 0.0);
        v.push_back(static_cast<double>(p.jail_turns) / config.jail.max_turns_held);
        v.push_back(p.bankrupt ? 1.0 : 0.0);
    }
    for (const auto& p : properties) {
        v.push_back(static_cast<double>(p.owner + 1) / config.num_players);
        v.push_back(p.mortgaged ? 1.0 : 0.0);
        v.push_back(static_cast<double>(p.houses) / 5.0);
    }
    for (int i = 0; i < config.num_players; ++i)
        v.push_back(i == acting_player ? 1.0 : 0.0);
    v.push_back(static_cast<double>(turn) / config.max_turns);
    v.push_back(phase == TurnPhase::Manage ? 1.0 : 0.0);
    v.push_back(buy_window_open ? 1.0 : 0.0);
    v.push_back(static_cast<double>(dice_total) /
                static_cast<double>(config.dice.count * config.dice.sides));
    for (int d = 0; d < config.dice.count; ++d) {
        double f = d < static_cast<int>(dice_faces.size())
                       ? static_cast<double>(dice_faces[static_cast<std::size_t>(d)])
                       : 0.0;
        v.push_back(f / config.dice.sides);
    }
    double moved = 0, passed_go = 0, rent_flag = 0, rent_amt = 0, tax = 0, bought = 0,
           jailed = 0, fined = 0;
    for (const auto& e : events) {
        switch (e.kind) {
            case EventKind::Moved: moved = 1; break;
            case EventKind::PassedGo: passed_go = 1; break;
            case EventKind::RentPaid:
                rent_flag = 1;
                rent_amt = static_cast<double>(e.amount) / kCashScale;
                break;
            case EventKind::TaxPaid: tax = 1; break;
            case EventKind::PropertyBought: bought = 1; break;
            case EventKind::WentToJail: jailed = 1; break;
            case EventKind::PaidJailFine: fined = 1; break;
            default: break;
        }
    }
    v.insert(v.end(), {moved, passed_go, rent_flag, rent_amt, tax, bought, jailed, fined});
    return v;
}

} // namespace parlor::game
