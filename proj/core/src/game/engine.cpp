#include "parlor/game/engine.hpp"

#include <algorithm>
#include <numeric>

#include "parlor/errors.hpp"

namespace parlor::game {

const char* action_name(ActionKind k) {
    switch (k) {
        case ActionKind::RollAndMove: return "roll_and_move";
        case ActionKind::Buy: return "buy";
        case ActionKind::Skip: return "skip";
        case ActionKind::PayJailFine: return "pay_jail_fine";
        case ActionKind::Mortgage: return "mortgage";
        case ActionKind::Unmortgage: return "unmortgage";
        case ActionKind::BuildHouse: return "build_house";
        case ActionKind::EndTurn: return "end_turn";
    }
    return "?";
}

ActionKind action_from_name(const std::string& name) {
    for (int i = 0; i < kActionKinds; ++i) {
        auto k = static_cast<ActionKind>(i);
        if (name == action_name(k)) return k;
    }
    throw SchemaError("unknown action name: " + name);
}

const char* event_name(EventKind k) {
    switch (k) {
        case EventKind::DiceRolled: return "dice_rolled";
        case EventKind::Moved: return "moved";
        case EventKind::PassedGo: return "passed_go";
        case EventKind::RentPaid: return "rent_paid";
        case EventKind::TaxPaid: return "tax_paid";
        case EventKind::PropertyBought: return "property_bought";
        case EventKind::Mortgaged: return "mortgaged";
        case EventKind::Unmortgaged: return "unmortgaged";
        case EventKind::AutoMortgaged: return "auto_mortgaged";
        case EventKind::HouseBuilt: return "house_built";
        case EventKind::WentToJail: return "went_to_jail";
        case EventKind::StayedInJail: return "stayed_in_jail";
        case EventKind::PaidJailFine: return "paid_jail_fine";
        case EventKind::ReleasedFromJail: return "released_from_jail";
        case EventKind::Bankrupt: return "bankrupt";
        case EventKind::GameOver: return "game_over";
    }
    return "?";
}

GameState new_game(const GameConfig& config, std::uint64_t seed) {
    config.validate();
    GameState s;
    s.players.assign(static_cast<std::size_t>(config.num_players), PlayerState{});
    for (auto& p : s.players) {
        p.cash = config.starting_cash;
        p.position = config.go_position;
    }
    s.properties.assign(config.properties.size(), PropertyState{});
    s.rng_state = derive_seed(seed, 0x9A3E);
    return s;
}

static int alive_count(const GameState& s) {
    int n = 0;
    for (const auto& p : s.players)
        if (!p.bankrupt) ++n;
    return n;
}

bool is_terminal(const GameConfig& config, const GameState& state) {
    return alive_count(state) <= 1 || state.turn >= config.max_turns;
}

std::optional<int> winner(const GameConfig& config, const GameState& state) {
    if (!is_terminal(config, state)) return std::nullopt;
    if (alive_count(state) != 1) return std::nullopt; // turn-cap draw
    for (std::size_t i = 0; i < state.players.size(); ++i)
        if (!state.players[i].bankrupt) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<Action> legal_actions(const GameConfig& config, const GameState& state) {
    if (is_terminal(config, state))
        throw TerminalStateError("legal_actions on a finished game");
    const auto& me = state.players[static_cast<std::size_t>(state.current_player)];
    std::vector<Action> out;

    if (state.phase == TurnPhase::PreRoll) {
        out.push_back({ActionKind::RollAndMove, -1});
        if (me.in_jail && me.cash >= config.jail.fine)
            out.push_back({ActionKind::PayJailFine, -1});
        return out;
    }

    // Manage phase.
    int here = config.property_at(me.position);
    if (state.buy_window_open && here >= 0 &&
        state.properties[static_cast<std::size_t>(here)].owner < 0) {
        if (me.cash >= config.properties[static_cast<std::size_t>(here)].price)
            out.push_back({ActionKind::Buy, here});
        out.push_back({ActionKind::Skip, -1});
    }
    std::vector<int> owners(state.properties.size());
    for (std::size_t i = 0; i < state.properties.size(); ++i)
        owners[i] = state.properties[i].owner;
    for (std::size_t i = 0; i < state.properties.size(); ++i) {
        const auto& ps = state.properties[i];
        if (ps.owner != state.current_player) continue;
        int pi = static_cast<int>(i);
        if (!ps.mortgaged && ps.houses == 0)
            out.push_back({ActionKind::Mortgage, pi});
        if (ps.mortgaged && me.cash >= config.unmortgage_cost(pi))
            out.push_back({ActionKind::Unmortgage, pi});
        if (!ps.mortgaged && ps.houses < 5 && me.cash >= config.house_cost(pi) &&
            config.color_group_complete(pi, state.current_player, owners))
            out.push_back({ActionKind::BuildHouse, pi});
    }
    out.push_back({ActionKind::EndTurn, -1});
    return out;
}

bool is_legal(const GameConfig& config, const GameState& state, const Action& action) {
    if (is_terminal(config, state)) return false;
    auto legal = legal_actions(config, state);
    return std::find(legal.begin(), legal.end(), action) != legal.end();
}

namespace {

struct Stepper {
    const GameConfig& cfg;
    GameState s;
    std::vector<Event> ev;
    int actor;

    PlayerState& me() { return s.players[static_cast<std::size_t>(actor)]; }

    // Raise cash by mortgaging house-free properties, cheapest first.
    void liquidate_towards(Money amount) {
        auto& p = me();
        while (p.cash < amount) {
            int pick = -1;
            Money pick_price = 0;
            for (std::size_t i = 0; i < s.properties.size(); ++i) {
                const auto& ps = s.properties[i];
                if (ps.owner != actor || ps.mortgaged || ps.houses > 0) continue;
                Money price = cfg.properties[i].price;
                if (pick < 0 || price < pick_price ||
                    (price == pick_price && static_cast<int>(i) < pick)) {
                    pick = static_cast<int>(i);
                    pick_price = price;
                }
            }
            if (pick < 0) return;
            s.properties[static_cast<std::size_t>(pick)].mortgaged = true;
            Money v = cfg.mortgage_value(pick);
            p.cash += v;
            ev.push_back({EventKind::AutoMortgaged, actor, pick, v});
        }
    }

    void go_bankrupt(int creditor) {
        auto& p = me();
        Money surrendered = p.cash;
        p.cash = 0;
        p.bankrupt = true;
        if (creditor >= 0)
            s.players[static_cast<std::size_t>(creditor)].cash += surrendered;
        for (auto& ps : s.properties) {
            if (ps.owner == actor) ps.owner = creditor; // -1 returns to the bank
        }
        ev.push_back({EventKind::Bankrupt, actor, -1, surrendered});
    }

    // Compulsory payment; mortgages as needed, bankrupts on shortfall.
    // Returns the amount actually handed over.
    Money force_pay(Money amount, int creditor, EventKind tag, int property) {
        liquidate_towards(amount);
        auto& p = me();
        if (p.cash >= amount) {
            p.cash -= amount;
            if (creditor >= 0) s.players[static_cast<std::size_t>(creditor)].cash += amount;
            ev.push_back({tag, actor, property, amount});
            return amount;
        }
        Money partial = p.cash;
        p.cash = 0;
        if (creditor >= 0) s.players[static_cast<std::size_t>(creditor)].cash += partial;
        if (partial > 0) ev.push_back({tag, actor, property, partial});
        go_bankrupt(creditor);
        return partial;
    }

    int roll_dice() {
        SplitMix64 rng(0);
        rng.set_state(s.rng_state);
        s.last_roll.clear();
        int total = 0;
        for (int d = 0; d < cfg.dice.count; ++d) {
            int face;
            if (cfg.dice.deterministic()) {
                // No entropy consumed: the outcome is forced.
                face = cfg.dice.min_total() / cfg.dice.count;
            } else {
                face = static_cast<int>(rng.next_categorical(cfg.dice.weights)) + 1;
            }
            s.last_roll.push_back(face);
            total += face;
        }
        s.rng_state = rng.state();
        ev.push_back({EventKind::DiceRolled, actor, -1, total});
        return total;
    }

    void land(int position) {
        auto& p = me();
        p.position = position;
        ev.push_back({EventKind::Moved, actor, position, 0});
        switch (cfg.square_kind(position)) {
            case SquareKind::Go:
            case SquareKind::Jail:
                break;
            case SquareKind::Tax:
                force_pay(cfg.tax_amount, -1, EventKind::TaxPaid, -1);
                break;
            case SquareKind::GoToJail:
                p.position = cfg.jail_position;
                p.in_jail = true;
                p.jail_turns = 0;
                ev.push_back({EventKind::WentToJail, actor, cfg.jail_position, 0});
                break;
            case SquareKind::Property: {
                int pi = cfg.property_at(position);
                const auto& ps = s.properties[static_cast<std::size_t>(pi)];
                if (ps.owner < 0) {
                    s.buy_window_open = true;
                } else if (ps.owner != actor && !ps.mortgaged) {
                    Money rent = cfg.rent_due(pi, ps.houses);
                    force_pay(rent, ps.owner, EventKind::RentPaid, pi);
                }
                break;
            }
        }
    }

    void move_by(int total) {
        auto& p = me();
        int raw = p.position + total;
        if (raw >= cfg.board_size) {
            p.cash += cfg.go_salary;
            ev.push_back({EventKind::PassedGo, actor, -1, cfg.go_salary});
        }
        land(raw % cfg.board_size);
    }

    void roll_and_move() {
        auto& p = me();
        if (!p.in_jail) {
            int total = roll_dice();
            move_by(total);
            s.phase = TurnPhase::Manage;
            return;
        }
        int total = roll_dice();
        bool doubles = std::adjacent_find(s.last_roll.begin(), s.last_roll.end(),
                                          std::not_equal_to<>()) == s.last_roll.end();
        if (doubles) {
            p.in_jail = false;
            p.jail_turns = 0;
            ev.push_back({EventKind::ReleasedFromJail, actor, -1, 0});
            move_by(total);
        } else {
            p.jail_turns += 1;
            if (p.jail_turns >= cfg.jail.max_turns_held) {
                force_pay(cfg.jail.fine, -1, EventKind::PaidJailFine, -1);
                if (!p.bankrupt) {
                    p.in_jail = false;
                    p.jail_turns = 0;
                    ev.push_back({EventKind::ReleasedFromJail, actor, -1, 0});
                    move_by(total);
                }
            } else {
                ev.push_back({EventKind::StayedInJail, actor, -1, 0});
            }
        }
        s.phase = TurnPhase::Manage;
    }

    void end_turn() {
        s.buy_window_open = false;
        s.phase = TurnPhase::PreRoll;
        s.turn += 1;
        if (s.turn >= cfg.max_turns) return;
        int n = static_cast<int>(s.players.size());
        for (int k = 1; k <= n; ++k) {
            int cand = (actor + k) % n;
            if (!s.players[static_cast<std::size_t>(cand)].bankrupt) {
                s.current_player = cand;
                return;
            }
        }
    }

    void apply(const Action& a) {
        auto& p = me();
        switch (a.kind) {
            case ActionKind::RollAndMove:
                roll_and_move();
                break;
            case ActionKind::Buy: {
                int pi = cfg.property_at(p.position);
                p.cash -= cfg.properties[static_cast<std::size_t>(pi)].price;
                s.properties[static_cast<std::size_t>(pi)].owner = actor;
                s.buy_window_open = false;
                ev.push_back({EventKind::PropertyBought, actor, pi,
                              cfg.properties[static_cast<std::size_t>(pi)].price});
                break;
            }
            case ActionKind::Skip:
                s.buy_window_open = false;
                break;
            case ActionKind::PayJailFine:
                p.cash -= cfg.jail.fine;
                p.in_jail = false;
                p.jail_turns = 0;
                ev.push_back({EventKind::PaidJailFine, actor, -1, cfg.jail.fine});
                ev.push_back({EventKind::ReleasedFromJail, actor, -1, 0});
                break;
            case ActionKind::Mortgage: {
                auto& ps = s.properties[static_cast<std::size_t>(a.target)];
                ps.mortgaged = true;
                p.cash += cfg.mortgage_value(a.target);
                ev.push_back({EventKind::Mortgaged, actor, a.target,
                              cfg.mortgage_value(a.target)});
                break;
            }
            case ActionKind::Unmortgage: {
                auto& ps = s.properties[static_cast<std::size_t>(a.target)];
                ps.mortgaged = false;
                p.cash -= cfg.unmortgage_cost(a.target);
                ev.push_back({EventKind::Unmortgaged, actor, a.target,
                              cfg.unmortgage_cost(a.target)});
                break;
            }
            case ActionKind::BuildHouse: {
                auto& ps = s.properties[static_cast<std::size_t>(a.target)];
                ps.houses += 1;
                p.cash -= cfg.house_cost(a.target);
                ev.push_back({EventKind::HouseBuilt, actor, a.target,
                              cfg.house_cost(a.target)});
                break;
            }
            case ActionKind::EndTurn:
                end_turn();
                break;
        }
        if (me().bankrupt) end_turn();
    }
};

} // namespace

StepResult step(const GameConfig& config, const GameState& state, const Action& action) {
    if (!is_legal(config, state, action))
        throw IllegalActionError(std::string(action_name(action.kind)) + " in current state");

    Stepper st{config, state, {}, state.current_player};
    st.apply(action);

    double reward = 0.0;
    if (st.s.players[static_cast<std::size_t>(st.actor)].bankrupt) {
        reward = -1.0;
    } else if (alive_count(st.s) == 1 && static_cast<int>(st.s.players.size()) > 1 &&
               !st.s.players[static_cast<std::size_t>(st.actor)].bankrupt &&
               alive_count(state) > 1) {
        reward = 1.0;
    }
    if (is_terminal(config, st.s) && !state.players.empty())
        st.ev.push_back({EventKind::GameOver, st.actor, -1, 0});

    return {std::move(st.s), reward, std::move(st.ev)};
}

Game::Game(GameConfig config, std::uint64_t seed)
    : config_(std::move(config)), state_(new_game(config_, seed)) {
    deed_exposed_.assign(config_.properties.size(),
                         config_.visibility == Visibility::Full);
    refresh_exposure();
}

StepResult Game::apply(const Action& action) {
    StepResult r = step(config_, state_, action);
    state_ = r.state;
    last_events_ = r.events;
    refresh_exposure();
    return r;
}

void Game::refresh_exposure() {
    if (config_.visibility == Visibility::Full) return;
    for (const auto& p : state_.players) {
        if (p.bankrupt) continue;
        int pi = config_.property_at(p.position);
        if (pi >= 0) deed_exposed_[static_cast<std::size_t>(pi)] = true;
    }
}

Observation Game::observation() const {
    return observe(config_, state_, last_events_, deed_exposed_);
}

void Game::swap_config(GameConfig next) {
    next.validate();
    if (next.board_size != config_.board_size ||
        next.num_players != config_.num_players ||
        next.properties.size() != config_.properties.size())
        throw ConfigError("mid-run config swap must preserve board shape");
    config_ = std::move(next);
    if (config_.visibility == Visibility::Full)
        deed_exposed_.assign(config_.properties.size(), true);
    refresh_exposure();
}

} // namespace parlor::game
