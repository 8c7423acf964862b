#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "simplicia/label_trie.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

/// The empty label: marks "no following vertex" in array-list node labels.
/// It compares greater than every vertex label.
inline constexpr Label kPhi = std::numeric_limits<Label>::max();

struct DagNode {
    static constexpr std::size_t kNoOrigin = std::numeric_limits<std::size_t>::max();

    Label label = 0;          // vertex label; 0 on the root
    std::vector<Label> tag;   // following labels carried by expanded copies
    std::size_t origin = kNoOrigin;  // index of the maximal simplex the node serves
    std::vector<std::size_t> children;
};

/// Rooted, node-labelled directed acyclic graph. Used for compressed trees
/// and for the outputs of the unprefix / closure / expansion transforms.
struct LabeledDag {
    std::vector<DagNode> nodes;
    std::size_t root = 0;

    std::size_t node_count() const noexcept { return nodes.size(); }
    std::size_t edge_count() const noexcept;
    /// Label sequences of all paths leaving the root (the empty path included).
    std::vector<std::vector<Label>> root_words() const;
};

LabeledDag dag_from_trie(const LabelTrie& trie);

/// Merges nodes whose subtrees are identical (same label, same tag, same
/// children up to merging). Computed bottom-up by hash-consing.
LabeledDag merge_identical_subtrees(const LabeledDag& dag);

}  // namespace simplicia
