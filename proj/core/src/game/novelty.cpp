#include "parlor/game/novelty.hpp"

#include <algorithm>
#include <cmath>

#include "parlor/errors.hpp"
#include "parlor/rng.hpp"

namespace parlor::game {

const char* novelty_kind_name(NoveltyKind k) {
    switch (k) {
        case NoveltyKind::SetPrice: return "set_price";
        case NoveltyKind::SetRent: return "set_rent";
        case NoveltyKind::RewireBoardOrder: return "rewire_board_order";
        case NoveltyKind::ChangeDice: return "change_dice";
        case NoveltyKind::ChangeGoSalary: return "change_go_salary";
        case NoveltyKind::ChangeJailFine: return "change_jail_fine";
    }
    return "?";
}

NoveltyKind novelty_kind_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(NoveltyKind::ChangeJailFine); ++i) {
        auto k = static_cast<NoveltyKind>(i);
        if (name == novelty_kind_name(k)) return k;
    }
    throw SchemaError("unknown novelty kind: " + name);
}

std::vector<int> PropertySelector::resolve(int property_count) const {
    if (!explicit_list.empty()) {
        auto out = explicit_list;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        for (int i : out)
            if (i < 0 || i >= property_count)
                throw ConfigError("property selector index out of range");
        return out;
    }
    int take = static_cast<int>(std::lround(fraction * property_count));
    take = std::clamp(take, 0, property_count);
    std::vector<int> all(static_cast<std::size_t>(property_count));
    for (int i = 0; i < property_count; ++i) all[static_cast<std::size_t>(i)] = i;
    SplitMix64 rng(derive_seed(seed, 0x5E1E));
    deterministic_shuffle(all, rng);
    all.resize(static_cast<std::size_t>(take));
    std::sort(all.begin(), all.end());
    return all;
}

GameConfig inject_novelty(const GameConfig& config, const NoveltySpec& spec) {
    GameConfig out = config;
    auto targets = spec.targets.resolve(static_cast<int>(config.properties.size()));

    switch (spec.kind) {
        case NoveltyKind::SetPrice:
            if (targets.empty()) throw ConfigError("novelty selector matched no properties");
            for (int i : targets)
                out.properties[static_cast<std::size_t>(i)].price = spec.new_value;
            break;
        case NoveltyKind::SetRent:
            if (targets.empty()) throw ConfigError("novelty selector matched no properties");
            for (int i : targets)
                out.properties[static_cast<std::size_t>(i)].rent = spec.new_value;
            break;
        case NoveltyKind::RewireBoardOrder: {
            if (targets.size() < 2)
                throw ConfigError("board rewire needs at least two target properties");
            // Rotate the positions of the targeted properties by one slot;
            // a fixed-point-free permutation so the change is always real.
            std::vector<int> pos;
            pos.reserve(targets.size());
            for (int i : targets)
                pos.push_back(out.properties[static_cast<std::size_t>(i)].position);
            std::rotate(pos.begin(), pos.begin() + 1, pos.end());
            for (std::size_t k = 0; k < targets.size(); ++k)
                out.properties[static_cast<std::size_t>(targets[k])].position = pos[k];
            break;
        }
        case NoveltyKind::ChangeDice:
            out.dice = spec.new_dice;
            break;
        case NoveltyKind::ChangeGoSalary:
            out.go_salary = spec.new_value;
            break;
        case NoveltyKind::ChangeJailFine:
            out.jail.fine = spec.new_value;
            break;
    }
    out.validate();
    return out;
}

} // namespace parlor::game
