#include "simplicia/label_trie.hpp"

#include <algorithm>

namespace simplicia {

namespace {

auto child_position(std::vector<LabelTrie::Child>& children, Label label) {
    return std::lower_bound(children.begin(), children.end(), label,
                            [](const LabelTrie::Child& c, Label l) { return c.first < l; });
}

}  // namespace

LabelTrie::LabelTrie() { clear(); }

void LabelTrie::clear() {
    nodes_.assign(1, Node{});
    free_.clear();
    live_ = 1;
}

LabelTrie::NodeId LabelTrie::allocate(Label label) {
    ++live_;
    if (!free_.empty()) {
        NodeId id = free_.back();
        free_.pop_back();
        nodes_[id].label = label;
        nodes_[id].children.clear();
        return id;
    }
    nodes_.push_back(Node{label, {}});
    return static_cast<NodeId>(nodes_.size() - 1);
}

LabelTrie::NodeId LabelTrie::child(NodeId parent, Label label) const {
    const auto& ch = nodes_[parent].children;
    auto it = std::lower_bound(ch.begin(), ch.end(), label, [](const Child& c, Label l) { return c.first < l; });
    return it != ch.end() && it->first == label ? it->second : kNone;
}

LabelTrie::NodeId LabelTrie::add_child(NodeId parent, Label label) {
    auto it = child_position(nodes_[parent].children, label);
    if (it != nodes_[parent].children.end() && it->first == label) return it->second;
    auto offset = it - nodes_[parent].children.begin();
    NodeId id = allocate(label);  // may reallocate nodes_
    auto& ch = nodes_[parent].children;
    ch.insert(ch.begin() + offset, Child{label, id});
    return id;
}

LabelTrie::NodeId LabelTrie::add_path(std::span<const Label> word) {
    NodeId cur = kRoot;
    for (Label l : word) cur = add_child(cur, l);
    return cur;
}

LabelTrie::NodeId LabelTrie::find(std::span<const Label> word) const {
    NodeId cur = kRoot;
    for (Label l : word) {
        cur = child(cur, l);
        if (cur == kNone) return kNone;
    }
    return cur;
}

void LabelTrie::release_subtree(NodeId id) {
    for (auto [l, c] : nodes_[id].children) release_subtree(c);
    nodes_[id].children.clear();
    nodes_[id].children.shrink_to_fit();
    free_.push_back(id);
    --live_;
}

void LabelTrie::detach(NodeId parent, Label label) {
    auto& ch = nodes_[parent].children;
    auto it = child_position(ch, label);
    if (it == ch.end() || it->first != label) return;
    NodeId id = it->second;
    ch.erase(it);
    release_subtree(id);
}

void LabelTrie::remove_branch(std::span<const Label> word) {
    // Cut below the last node on the path that keeps other children (or the root).
    NodeId cut_parent = kRoot;
    std::size_t cut_depth = 0;
    NodeId cur = kRoot;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (nodes_[cur].children.size() > 1) {
            cut_parent = cur;
            cut_depth = i;
        }
        cur = child(cur, word[i]);
        if (cur == kNone) return;
    }
    if (!nodes_[cur].children.empty()) return;
    if (word.empty()) return;
    detach(cut_parent, word[cut_depth]);
}

std::size_t LabelTrie::leaf_count() const {
    std::size_t leaves = 0;
    std::vector<NodeId> stack{kRoot};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (id != kRoot && nodes_[id].children.empty()) ++leaves;
        for (auto [l, c] : nodes_[id].children) stack.push_back(c);
    }
    return leaves;
}

void LabelTrie::for_each_word(const std::function<void(NodeId, std::span<const Label>)>& visit) const {
    std::vector<Label> word;
    std::function<void(NodeId)> rec = [&](NodeId id) {
        for (auto [l, c] : nodes_[id].children) {
            word.push_back(l);
            visit(c, word);
            rec(c);
            word.pop_back();
        }
    };
    rec(kRoot);
}

}  // namespace simplicia
