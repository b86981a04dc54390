#include "parlor/game/heuristic.hpp"

#include "parlor/game/engine.hpp"

namespace parlor::game {

Action heuristic_policy(const GameConfig& config, const GameState& state) {
    const auto& me = state.players[static_cast<std::size_t>(state.current_player)];
    const Money reserve = config.heuristic_reserve;

    if (state.phase == TurnPhase::PreRoll) {
        if (me.in_jail && me.cash >= config.jail.fine + reserve)
            return {ActionKind::PayJailFine, -1};
        return {ActionKind::RollAndMove, -1};
    }

    int here = config.property_at(me.position);
    if (state.buy_window_open && here >= 0 &&
        state.properties[static_cast<std::size_t>(here)].owner < 0) {
        Money price = config.properties[static_cast<std::size_t>(here)].price;
        if (me.cash >= price + reserve) return {ActionKind::Buy, here};
        return {ActionKind::Skip, -1};
    }

    // Cash running low: mortgage the cheapest house-free holding.
    if (me.cash < reserve / 2) {
        int pick = -1;
        Money pick_price = 0;
        for (std::size_t i = 0; i < state.properties.size(); ++i) {
            const auto& ps = state.properties[i];
            if (ps.owner != state.current_player || ps.mortgaged || ps.houses > 0) continue;
            Money price = config.properties[i].price;
            if (pick < 0 || price < pick_price) {
                pick = static_cast<int>(i);
                pick_price = price;
            }
        }
        if (pick >= 0) return {ActionKind::Mortgage, pick};
    }

    std::vector<int> owners(state.properties.size());
    for (std::size_t i = 0; i < state.properties.size(); ++i)
        owners[i] = state.properties[i].owner;

    // Develop completed color groups, evening out house counts low-first.
    int build = -1;
    for (std::size_t i = 0; i < state.properties.size(); ++i) {
        const auto& ps = state.properties[i];
        int pi = static_cast<int>(i);
        if (ps.owner != state.current_player || ps.mortgaged || ps.houses >= 5) continue;
        if (!config.color_group_complete(pi, state.current_player, owners)) continue;
        if (me.cash < config.house_cost(pi) + reserve) continue;
        if (build < 0 ||
            ps.houses < state.properties[static_cast<std::size_t>(build)].houses)
            build = pi;
    }
    if (build >= 0) return {ActionKind::BuildHouse, build};

    // Re-activate mortgaged holdings when comfortably flush.
    for (std::size_t i = 0; i < state.properties.size(); ++i) {
        const auto& ps = state.properties[i];
        int pi = static_cast<int>(i);
        if (ps.owner != state.current_player || !ps.mortgaged) continue;
        if (me.cash >= config.unmortgage_cost(pi) + 2 * reserve)
            return {ActionKind::Unmortgage, pi};
    }

    return {ActionKind::EndTurn, -1};
}

} // namespace parlor::game
