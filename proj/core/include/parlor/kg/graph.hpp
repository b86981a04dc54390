#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <vector>

#include "parlor/kg/vocab.hpp"

namespace parlor::kg {

struct Triple {
    NodeId subject = 0;
    RelationId relation = 0;
    NodeId object = 0;

    auto operator<=>(const Triple&) const = default;
};

// A replacement, pure addition, or pure removal of one triple.
struct TupleChange {
    std::optional<Triple> old_triple;
    std::optional<Triple> new_triple;

    bool is_replacement() const { return old_triple && new_triple; }
    auto operator<=>(const TupleChange&) const = default;
};

struct Relink {
    NodeId subject;
    RelationId relation;
    NodeId old_object;
    NodeId new_object;

    auto operator<=>(const Relink&) const = default;
};

struct GraphDiff {
    std::vector<Triple> added;
    std::vector<Triple> removed;
    std::vector<Relink> relinked;

    bool empty() const { return added.empty() && removed.empty() && relinked.empty(); }
};

// Immutable triple store split into static and dynamic partitions. All
// mutating operations return a new graph; values are cheap to copy at this
// scale and safe to share across rollout threads.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;
    KnowledgeGraph(std::vector<Triple> static_triples, std::vector<Triple> dynamic_triples);

    const std::vector<Triple>& static_triples() const { return static_; }
    const std::vector<Triple>& dynamic_triples() const { return dynamic_; }
    std::vector<Triple> all_triples() const; // sorted union

    bool contains(const Triple& t) const;
    std::size_t size() const { return static_.size() + dynamic_.size(); }

    // Throws StaleChangeError when a replacement/removal names an absent
    // triple. The partition is chosen by the triple's relation.
    KnowledgeGraph apply_change(const Vocab& vocab, const TupleChange& change) const;

    bool operator==(const KnowledgeGraph&) const = default;

private:
    std::vector<Triple> static_;
    std::vector<Triple> dynamic_;
};

// Relinked-aware structural diff. A (subject, relation) pair present on
// both sides with different objects counts as a relink when the relation
// is declared functional; everything else lands in added/removed.
GraphDiff diff(const Vocab& vocab, const std::vector<Triple>& expected,
               const std::vector<Triple>& observed);

// Triples whose two endpoints both lie within undirected distance k of a
// seed entity. Partitions are preserved. Throws VocabularyError for seeds
// that are not interned.
KnowledgeGraph k_hop_subgraph(const Vocab& vocab, const KnowledgeGraph& graph,
                              const std::vector<NodeId>& seeds, int k);

// Deterministic text form: one triple per line, lexicographic by
// (subject, relation, object) text, static partition first.
void serialize(std::ostream& out, const Vocab& vocab, const KnowledgeGraph& graph);
std::string serialize_to_string(const Vocab& vocab, const KnowledgeGraph& graph);

} // namespace parlor::kg
