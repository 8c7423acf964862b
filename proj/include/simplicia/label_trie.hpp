#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "simplicia/types.hpp"

namespace simplicia {

/// Arena-backed trie over label words. Children of a node are kept in a
/// vector sorted by label, so child lookup is a binary search. Node ids of
/// removed subtrees are recycled.
class LabelTrie {
public:
    using NodeId = std::uint32_t;
    using Child = std::pair<Label, NodeId>;
    static constexpr NodeId kRoot = 0;
    static constexpr NodeId kNone = UINT32_MAX;

    LabelTrie();

    Label label(NodeId id) const { return nodes_[id].label; }
    std::span<const Child> children(NodeId id) const { return nodes_[id].children; }
    bool is_leaf(NodeId id) const { return nodes_[id].children.empty(); }

    NodeId child(NodeId parent, Label label) const;
    /// Returns the child with this label, creating it when missing.
    NodeId add_child(NodeId parent, Label label);
    /// Follows `word` from the root, creating missing nodes. Returns the end node.
    NodeId add_path(std::span<const Label> word);
    /// Follows `word` from the root; kNone when some label is missing.
    NodeId find(std::span<const Label> word) const;
    /// Removes the child subtree reached from `parent` through `label`.
    void detach(NodeId parent, Label label);
    /// Removes the leaf at the end of `word` together with every ancestor that
    /// would become a childless non-root node.
    void remove_branch(std::span<const Label> word);
    void clear();

    /// Number of nodes including the root.
    std::size_t node_count() const noexcept { return live_; }
    std::size_t edge_count() const noexcept { return live_ - 1; }
    std::size_t leaf_count() const;

    /// Visits every non-root node in preorder with the word spelled from the
    /// root down to it.
    void for_each_word(const std::function<void(NodeId, std::span<const Label>)>& visit) const;

private:
    struct Node {
        Label label = 0;
        std::vector<Child> children;
    };

    NodeId allocate(Label label);
    void release_subtree(NodeId id);

    std::vector<Node> nodes_;
    std::vector<NodeId> free_;
    std::size_t live_ = 0;
};

}  // namespace simplicia
