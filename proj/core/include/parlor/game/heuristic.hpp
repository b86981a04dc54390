#pragma once

#include "parlor/game/state.hpp"

namespace parlor::game {

// Deterministic rule-based opponent. Buys anything affordable above a cash
// reserve, pays its way out of jail when flush, builds houses on completed
// color groups, and mortgages its cheapest property when cash runs low.
Action heuristic_policy(const GameConfig& config, const GameState& state);

} // namespace parlor::game
