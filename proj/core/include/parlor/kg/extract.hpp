#pragma once

#include "parlor/game/observation.hpp"
#include "parlor/kg/graph.hpp"

namespace parlor::kg {

// Deterministic, total mapping from an observation to triples.
//
// Dynamic: per player has_cash / at_square / in_jail, per property
// owned_by / is_mortgaged / has_houses.
// Static: per property at_position / has_color always, has_price /
// has_rent when the deed is exposed; plus the board squares' salary,
// fine, tax and position facts.
KnowledgeGraph extract_triples(Vocab& vocab, const game::Observation& observation,
                               const game::GameConfig& config);

// The static partition alone (what structural novelty detection compares).
std::vector<Triple> extract_static(Vocab& vocab, const game::Observation& observation,
                                   const game::GameConfig& config);

} // namespace parlor::kg
