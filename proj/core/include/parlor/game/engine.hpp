#pragma once

#include <optional>
#include <vector>

#include "parlor/game/observation.hpp"
#include "parlor/game/state.hpp"
#include "parlor/rng.hpp"

namespace parlor::game {

struct StepResult {
    GameState state;
    double reward = 0.0; // for the player who acted: +1 win, -1 own bankruptcy
    std::vector<Event> events;
};

// All transition logic is in free functions over (config, state) values, so
// states can be snapshotted, replayed and diffed freely. `Game` below is a
// thin convenience wrapper that also tracks deed exposure for LandedOnly
// visibility.

GameState new_game(const GameConfig& config, std::uint64_t seed);

bool is_terminal(const GameConfig& config, const GameState& state);
// Winner index, or nullopt for draws / unfinished games.
std::optional<int> winner(const GameConfig& config, const GameState& state);

std::vector<Action> legal_actions(const GameConfig& config, const GameState& state);
bool is_legal(const GameConfig& config, const GameState& state, const Action& action);

StepResult step(const GameConfig& config, const GameState& state, const Action& action);

class Game {
public:
    Game(GameConfig config, std::uint64_t seed);

    const GameConfig& config() const { return config_; }
    const GameState& state() const { return state_; }
    bool terminal() const { return is_terminal(config_, state_); }
    std::optional<int> result() const { return winner(config_, state_); }

    std::vector<Action> legal() const { return legal_actions(config_, state_); }
    StepResult apply(const Action& action);

    Observation observation() const;

    // Swap the live rule set mid-run (novelty activation). The state must
    // stay valid under the new config.
    void swap_config(GameConfig next);

private:
    void refresh_exposure();

    GameConfig config_;
    GameState state_;
    std::vector<Event> last_events_;
    std::vector<bool> deed_exposed_;
};

} // namespace parlor::game
