#include "parlor/kg/vocab.hpp"

#include "parlor/errors.hpp"

namespace parlor::kg {

Vocab::Vocab() {
    auto reg = [&](const char* name, bool is_static) {
        RelationId id = static_cast<RelationId>(relations_.size());
        relations_.push_back({name, true, is_static});
        relation_index_[name] = id;
        return id;
    };
    has_price = reg("has_price", true);
    has_rent = reg("has_rent", true);
    has_color = reg("has_color", true);
    at_position = reg("at_position", true);
    pays_salary = reg("pays_salary", true);
    fine_amount = reg("fine_amount", true);
    tax_amount = reg("tax_amount", true);
    owned_by = reg("owned_by", false);
    is_mortgaged = reg("is_mortgaged", false);
    has_houses = reg("has_houses", false);
    has_cash = reg("has_cash", false);
    at_square = reg("at_square", false);
    in_jail = reg("in_jail", false);
}

NodeId Vocab::intern(const std::string& text, NodeKind kind, long long value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(text);
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({text, kind, value});
    index_.emplace(text, id);
    return id;
}

NodeId Vocab::entity(const std::string& name) { return intern(name, NodeKind::Entity, 0); }

NodeId Vocab::int_value(long long v) {
    return intern("v:" + std::to_string(v), NodeKind::IntValue, v);
}

NodeId Vocab::bool_value(bool v) {
    return intern(v ? "true" : "false", NodeKind::BoolValue, v ? 1 : 0);
}

std::optional<NodeId> Vocab::find(const std::string& text) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(text);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeInfo Vocab::node(NodeId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (id >= nodes_.size()) throw VocabularyError("node id out of range");
    return nodes_[id];
}

std::size_t Vocab::node_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return nodes_.size();
}

RelationId Vocab::relation(const std::string& name) const {
    auto it = relation_index_.find(name);
    if (it == relation_index_.end()) throw VocabularyError("unknown relation: " + name);
    return it->second;
}

const RelationInfo& Vocab::relation_info(RelationId id) const {
    if (id >= relations_.size()) throw VocabularyError("relation id out of range");
    return relations_[id];
}

std::string square_entity_name(const game::GameConfig& config, int position) {
    switch (config.square_kind(position)) {
        case game::SquareKind::Go: return "go";
        case game::SquareKind::Jail: return "jail";
        case game::SquareKind::Tax: return "tax_office";
        case game::SquareKind::GoToJail: return "go_to_jail";
        case game::SquareKind::Property: {
            int pi = config.property_at(position);
            return config.properties[static_cast<std::size_t>(pi)].name;
        }
    }
    return "square_" + std::to_string(position);
}

} // namespace parlor::kg
