#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parlor/game/engine.hpp"

namespace parlor::game {

// One engine step as recorded in a replay log: full before/after snapshots
// plus the action and events, which is everything rule learning ingests.
struct StepRecord {
    int turn = 0;
    int player = 0;
    GameState state;
    Action action;
    GameState next;
    std::vector<Event> events;
    int dice_total = 0; // 0 when the step rolled no dice
};

// Line-delimited JSON: one header line (config snapshot) followed by one
// line per step. Deterministic byte-for-byte given the same run.
void write_replay(std::ostream& out, const GameConfig& config,
                  const std::vector<StepRecord>& steps);
void write_replay_file(const std::string& path, const GameConfig& config,
                       const std::vector<StepRecord>& steps);

struct Replay {
    GameConfig config;
    std::vector<StepRecord> steps;
};

Replay read_replay(std::istream& in);
Replay read_replay_file(const std::string& path);

// JSON round-trips for configs and novelty specs (the documented config
// file formats).
std::string config_to_json(const GameConfig& config);
GameConfig config_from_json(const std::string& text);
void write_config_file(const std::string& path, const GameConfig& config);
GameConfig read_config_file(const std::string& path);

} // namespace parlor::game
