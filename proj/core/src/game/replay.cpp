#include "parlor/game/replay.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parlor/errors.hpp"

namespace parlor::game {

using json = nlohmann::ordered_json;

namespace {

json state_to_json(const GameState& s) {
    json players = json::array();
    for (const auto& p : s.players)
        players.push_back({{"cash", p.cash},
                           {"position", p.position},
                           {"in_jail", p.in_jail},
                           {"jail_turns", p.jail_turns},
                           {"bankrupt", p.bankrupt}});
    json props = json::array();
    for (const auto& p : s.properties)
        props.push_back({{"owner", p.owner}, {"mortgaged", p.mortgaged}, {"houses", p.houses}});
    return {{"turn", s.turn},
            {"current_player", s.current_player},
            {"phase", static_cast<int>(s.phase)},
            {"buy_window_open", s.buy_window_open},
            {"players", players},
            {"properties", props},
            {"last_roll", s.last_roll},
            {"rng_state", s.rng_state}};
}

GameState state_from_json(const json& j) {
    GameState s;
    s.turn = j.at("turn").get<int>();
    s.current_player = j.at("current_player").get<int>();
    s.phase = static_cast<TurnPhase>(j.at("phase").get<int>());
    s.buy_window_open = j.at("buy_window_open").get<bool>();
    for (const auto& p : j.at("players")) {
        PlayerState ps;
        ps.cash = p.at("cash").get<Money>();
        ps.position = p.at("position").get<int>();
        ps.in_jail = p.at("in_jail").get<bool>();
        ps.jail_turns = p.at("jail_turns").get<int>();
        ps.bankrupt = p.at("bankrupt").get<bool>();
        s.players.push_back(ps);
    }
    for (const auto& p : j.at("properties")) {
        PropertyState ps;
        ps.owner = p.at("owner").get<int>();
        ps.mortgaged = p.at("mortgaged").get<bool>();
        ps.houses = p.at("houses").get<int>();
        s.properties.push_back(ps);
    }
    s.last_roll = j.at("last_roll").get<std::vector<int>>();
    s.rng_state = j.at("rng_state").get<std::uint64_t>();
    return s;
}

json events_to_json(const std::vector<Event>& events) {
    json out = json::array();
    for (const auto& e : events)
        out.push_back({{"kind", event_name(e.kind)},
                       {"player", e.player},
                       {"property", e.property},
                       {"amount", e.amount}});
    return out;
}

std::vector<Event> events_from_json(const json& j) {
    std::vector<Event> out;
    for (const auto& e : j) {
        Event ev;
        std::string kind = e.at("kind").get<std::string>();
        bool found = false;
        for (int i = 0; i <= static_cast<int>(EventKind::GameOver); ++i) {
            if (kind == event_name(static_cast<EventKind>(i))) {
                ev.kind = static_cast<EventKind>(i);
                found = true;
                break;
            }
        }
        if (!found) throw IngestionError("unknown event kind: " + kind);
        ev.player = e.at("player").get<int>();
        ev.property = e.at("property").get<int>();
        ev.amount = e.at("amount").get<Money>();
        out.push_back(ev);
    }
    return out;
}

json config_to_json_obj(const GameConfig& c) {
    json props = json::array();
    for (const auto& p : c.properties)
        props.push_back({{"name", p.name},
                         {"color", p.color},
                         {"price", p.price},
                         {"rent", p.rent},
                         {"position", p.position}});
    return {{"board_size", c.board_size},
            {"properties", props},
            {"dice", {{"count", c.dice.count}, {"sides", c.dice.sides}, {"weights", c.dice.weights}}},
            {"starting_cash", c.starting_cash},
            {"go_salary", c.go_salary},
            {"tax_amount", c.tax_amount},
            {"jail", {{"fine", c.jail.fine}, {"max_turns_held", c.jail.max_turns_held}}},
            {"max_turns", c.max_turns},
            {"num_players", c.num_players},
            {"go_position", c.go_position},
            {"jail_position", c.jail_position},
            {"tax_position", c.tax_position},
            {"go_to_jail_position", c.go_to_jail_position},
            {"house_rent_bonus", c.house_rent_bonus},
            {"heuristic_reserve", c.heuristic_reserve},
            {"visibility", c.visibility == Visibility::Full ? "full" : "landed_only"}};
}

GameConfig config_from_json_obj(const json& j) {
    GameConfig c;
    c.board_size = j.at("board_size").get<int>();
    c.properties.clear();
    for (const auto& p : j.at("properties")) {
        PropertySpec ps;
        ps.name = p.at("name").get<std::string>();
        ps.color = p.at("color").get<std::string>();
        ps.price = p.at("price").get<Money>();
        ps.rent = p.at("rent").get<Money>();
        ps.position = p.at("position").get<int>();
        c.properties.push_back(std::move(ps));
    }
    const auto& d = j.at("dice");
    c.dice.count = d.at("count").get<int>();
    c.dice.sides = d.at("sides").get<int>();
    c.dice.weights = d.at("weights").get<std::vector<double>>();
    c.starting_cash = j.at("starting_cash").get<Money>();
    c.go_salary = j.at("go_salary").get<Money>();
    c.tax_amount = j.at("tax_amount").get<Money>();
    c.jail.fine = j.at("jail").at("fine").get<Money>();
    c.jail.max_turns_held = j.at("jail").at("max_turns_held").get<int>();
    c.max_turns = j.at("max_turns").get<int>();
    c.num_players = j.at("num_players").get<int>();
    c.go_position = j.at("go_position").get<int>();
    c.jail_position = j.at("jail_position").get<int>();
    c.tax_position = j.at("tax_position").get<int>();
    c.go_to_jail_position = j.at("go_to_jail_position").get<int>();
    c.house_rent_bonus = j.at("house_rent_bonus").get<Money>();
    c.heuristic_reserve = j.at("heuristic_reserve").get<Money>();
    if (j.contains("visibility"))
        c.visibility = j.at("visibility").get<std::string>() == "landed_only"
                           ? Visibility::LandedOnly
                           : Visibility::Full;
    c.validate();
    return c;
}

} // namespace

void write_replay(std::ostream& out, const GameConfig& config,
                  const std::vector<StepRecord>& steps) {
    json header = {{"type", "header"}, {"config", config_to_json_obj(config)}};
    out << header.dump() << "\n";
    for (const auto& st : steps) {
        json rec = {{"type", "step"},
                    {"turn", st.turn},
                    {"player", st.player},
                    {"state", state_to_json(st.state)},
                    {"action",
                     {{"kind", action_name(st.action.kind)}, {"target", st.action.target}}},
                    {"next", state_to_json(st.next)},
                    {"events", events_to_json(st.events)},
                    {"dice_total", st.dice_total}};
        out << rec.dump() << "\n";
    }
}

void write_replay_file(const std::string& path, const GameConfig& config,
                       const std::vector<StepRecord>& steps) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open replay file for writing: " + path);
    write_replay(f, config, steps);
}

Replay read_replay(std::istream& in) {
    Replay r;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw IngestionError("malformed replay line");
        std::string type = j.at("type").get<std::string>();
        if (type == "header") {
            r.config = config_from_json_obj(j.at("config"));
            have_header = true;
        } else if (type == "step") {
            StepRecord st;
            st.turn = j.at("turn").get<int>();
            st.player = j.at("player").get<int>();
            st.state = state_from_json(j.at("state"));
            st.action.kind = action_from_name(j.at("action").at("kind").get<std::string>());
            st.action.target = j.at("action").at("target").get<int>();
            st.next = state_from_json(j.at("next"));
            st.events = events_from_json(j.at("events"));
            st.dice_total = j.at("dice_total").get<int>();
            r.steps.push_back(std::move(st));
        } else {
            throw IngestionError("unknown replay record type: " + type);
        }
    }
    if (!have_header) throw IngestionError("replay has no header record");
    return r;
}

Replay read_replay_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open replay file: " + path);
    return read_replay(f);
}

std::string config_to_json(const GameConfig& config) {
    return config_to_json_obj(config).dump(2);
}

GameConfig config_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IngestionError("malformed config JSON");
    return config_from_json_obj(j);
}

void write_config_file(const std::string& path, const GameConfig& config) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open config file for writing: " + path);
    f << config_to_json(config) << "\n";
}

GameConfig read_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return config_from_json(ss.str());
}

} // namespace parlor::game
