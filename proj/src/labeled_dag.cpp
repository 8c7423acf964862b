#include "simplicia/labeled_dag.hpp"

#include <algorithm>
#include <map>

namespace simplicia {

std::size_t LabeledDag::edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& n : nodes) e += n.children.size();
    return e;
}

std::vector<std::vector<Label>> LabeledDag::root_words() const {
    std::vector<std::vector<Label>> out{{}};
    std::vector<Label> word;
    auto rec = [&](auto& self, std::size_t id) -> void {
        for (std::size_t c : nodes[id].children) {
            word.push_back(nodes[c].label);
            out.push_back(word);
            self(self, c);
            word.pop_back();
        }
    };
    rec(rec, root);
    return out;
}

LabeledDag dag_from_trie(const LabelTrie& trie) {
    LabeledDag dag;
    dag.nodes.emplace_back();
    auto rec = [&](auto& self, LabelTrie::NodeId id, std::size_t out) -> void {
        for (auto [l, c] : trie.children(id)) {
            std::size_t child = dag.nodes.size();
            dag.nodes.push_back(DagNode{l, {}, DagNode::kNoOrigin, {}});
            dag.nodes[out].children.push_back(child);
            self(self, c, child);
        }
    };
    rec(rec, LabelTrie::kRoot, 0);
    return dag;
}

LabeledDag merge_identical_subtrees(const LabeledDag& dag) {
    using Key = std::tuple<bool, Label, std::vector<Label>, std::vector<std::size_t>>;
    std::map<Key, std::size_t> classes;
    std::vector<std::size_t> class_of(dag.nodes.size(), SIZE_MAX);
    LabeledDag out;

    auto visit = [&](auto& self, std::size_t id) -> std::size_t {
        if (class_of[id] != SIZE_MAX) return class_of[id];
        const auto& node = dag.nodes[id];
        std::vector<std::size_t> kids;
        kids.reserve(node.children.size());
        for (std::size_t c : node.children) kids.push_back(self(self, c));
        std::sort(kids.begin(), kids.end());
        Key key{id == dag.root, node.label, node.tag, kids};
        auto [it, inserted] = classes.try_emplace(std::move(key), out.nodes.size());
        if (inserted) out.nodes.push_back(DagNode{node.label, node.tag, DagNode::kNoOrigin, std::move(kids)});
        return class_of[id] = it->second;
    };
    out.root = visit(visit, dag.root);
    return out;
}

}  // namespace simplicia
