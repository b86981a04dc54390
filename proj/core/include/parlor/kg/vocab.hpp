#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parlor/game/config.hpp"

namespace parlor::kg {

using NodeId = std::uint32_t;
using RelationId = std::uint32_t;

enum class NodeKind : std::uint8_t { Entity, IntValue, BoolValue };

struct NodeInfo {
    std::string text;
    NodeKind kind = NodeKind::Entity;
    long long value = 0; // numeric payload for IntValue / BoolValue nodes
};

struct RelationInfo {
    std::string name;
    bool functional = true; // at most one object per subject
    bool static_relation = false;
};

// Interning table for graph nodes and relations. Relations are registered
// up front in a fixed order so their ids are stable across runs; nodes are
// interned on demand under a mutex (rollout workers share one vocabulary).
class Vocab {
public:
    Vocab();

    NodeId entity(const std::string& name);
    NodeId int_value(long long v);
    NodeId bool_value(bool v);

    std::optional<NodeId> find(const std::string& text) const;
    NodeInfo node(NodeId id) const; // by value: the table may reallocate
    std::size_t node_count() const;

    RelationId relation(const std::string& name) const; // throws VocabularyError
    const RelationInfo& relation_info(RelationId id) const;
    std::size_t relation_count() const { return relations_.size(); }

    // Fixed relation ids (registered in the constructor).
    RelationId has_price, has_rent, has_color, at_position, pays_salary, fine_amount,
        tax_amount;                                              // static
    RelationId owned_by, is_mortgaged, has_houses, has_cash, at_square, in_jail; // dynamic

private:
    NodeId intern(const std::string& text, NodeKind kind, long long value);

    mutable std::mutex mu_;
    std::vector<NodeInfo> nodes_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<RelationInfo> relations_;
    std::unordered_map<std::string, RelationId> relation_index_;
};

using VocabPtr = std::shared_ptr<Vocab>;

// Board geometry helper: which entity name sits on each square.
std::string square_entity_name(const game::GameConfig& config, int position);

} // namespace parlor::kg
