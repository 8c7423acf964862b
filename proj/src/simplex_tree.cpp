#include "simplicia/simplex_tree.hpp"

#include <algorithm>

namespace simplicia {

const char* to_string(OpStatus s) {
    switch (s) {
        case OpStatus::applied: return "applied";
        case OpStatus::not_a_face: return "not a face";
        case OpStatus::not_free: return "not free";
        case OpStatus::absorbed: return "absorbed";
    }
    return "?";
}

SimplexTree::SimplexTree(const ComplexSpec& spec) : n_(spec.n) {
    for (const auto& m : spec.maximal) insert_full(m);
}

SimplexTree SimplexTree::from_words(const std::vector<std::vector<Label>>& words, Label n) {
    SimplexTree t;
    t.n_ = n;
    for (const auto& w : words) {
        t.trie_.add_path(w);
        if (!w.empty()) t.n_ = std::max(t.n_, w.back());
    }
    return t;
}

bool SimplexTree::contains(const Simplex& s) const { return trie_.find(s.labels()) != LabelTrie::kNone; }

void SimplexTree::insert_suffixes(LabelTrie::NodeId node, const Simplex& s, std::size_t from) {
    for (std::size_t j = from; j < s.size(); ++j) insert_suffixes(trie_.add_child(node, s[j]), s, j + 1);
}

void SimplexTree::insert_full(const Simplex& s) {
    if (s.empty()) return;
    n_ = std::max(n_, s.last());
    insert_suffixes(LabelTrie::kRoot, s, 0);
}

namespace {

// Walks every node whose word contains `s`, calling hit(parent, node, word)
// at the nodes where the last label of s is matched. Subtrees that can no
// longer match are skipped: labels increase along paths, so once a label
// exceeds the next required one the branch is dead.
template <class Hit>
void walk_cofaces(const LabelTrie& trie, const Simplex& s, Hit&& hit) {
    std::vector<Label> word;
    auto rec = [&](auto& self, LabelTrie::NodeId node, std::size_t matched) -> void {
        for (auto [l, c] : trie.children(node)) {
            if (l > s[matched]) break;
            word.push_back(l);
            if (l == s[matched]) {
                if (matched + 1 == s.size())
                    hit(node, c, word);
                else
                    self(self, c, matched + 1);
            } else {
                self(self, c, matched);
            }
            word.pop_back();
        }
    };
    rec(rec, LabelTrie::kRoot, 0);
}

}  // namespace

std::set<Simplex> SimplexTree::locate_cofaces(const Simplex& s) const {
    std::set<Simplex> out;
    if (s.empty()) {
        for (auto& f : faces()) out.insert(std::move(f));
        return out;
    }
    walk_cofaces(trie_, s, [&](LabelTrie::NodeId, LabelTrie::NodeId node, const std::vector<Label>& word) {
        out.insert(Simplex::from_sorted(word));
        std::vector<Label> w = word;
        auto sub = [&](auto& self, LabelTrie::NodeId id) -> void {
            for (auto [l, c] : trie_.children(id)) {
                w.push_back(l);
                out.insert(Simplex::from_sorted(w));
                self(self, c);
                w.pop_back();
            }
        };
        sub(sub, node);
    });
    return out;
}

OpStatus SimplexTree::remove_face(const Simplex& s) {
    if (s.empty() || !contains(s)) return OpStatus::not_a_face;
    std::vector<std::pair<LabelTrie::NodeId, Label>> cuts;
    walk_cofaces(trie_, s, [&](LabelTrie::NodeId parent, LabelTrie::NodeId, const std::vector<Label>& word) {
        cuts.emplace_back(parent, word.back());
    });
    // Each cut removes a whole subtree, and no cut node lies inside another
    // cut subtree (the walk stops at the first full match on a path).
    for (auto [parent, label] : cuts) trie_.detach(parent, label);
    return OpStatus::applied;
}

OpStatus SimplexTree::elementary_collapse(const Simplex& tau, const Simplex& sigma) {
    if (sigma.empty() || tau.size() <= sigma.size() || !tau.is_superset_of(sigma) || !contains(tau))
        return OpStatus::not_free;
    auto cofaces = locate_cofaces(sigma);
    if (cofaces.size() != 2 || !cofaces.contains(tau)) return OpStatus::not_free;
    // tau is maximal, hence a leaf; once it is gone sigma is a leaf too.
    auto detach_leaf = [&](const Simplex& s) {
        std::vector<Label> prefix(s.begin(), s.end() - 1);
        trie_.detach(trie_.find(prefix), s.last());
    };
    detach_leaf(tau);
    detach_leaf(sigma);
    return OpStatus::applied;
}

void SimplexTree::edge_contract(Label u, Label v) {
    if (u == v) return;
    std::vector<std::vector<Label>> words;
    trie_.for_each_word([&](LabelTrie::NodeId, std::span<const Label> word) {
        std::vector<Label> w(word.begin(), word.end());
        for (auto& x : w)
            if (x == u) x = v;
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        words.push_back(std::move(w));
    });
    trie_.clear();
    for (const auto& w : words) trie_.add_path(w);
}

std::vector<Simplex> SimplexTree::faces() const {
    std::vector<Simplex> out;
    out.reserve(trie_.edge_count());
    trie_.for_each_word([&](LabelTrie::NodeId, std::span<const Label> word) {
        out.push_back(Simplex::from_sorted(std::vector<Label>(word.begin(), word.end())));
    });
    return out;
}

ComplexSpec SimplexTree::to_spec() const {
    std::vector<Simplex> leaves;
    trie_.for_each_word([&](LabelTrie::NodeId id, std::span<const Label> word) {
        if (trie_.is_leaf(id)) leaves.push_back(Simplex::from_sorted(std::vector<Label>(word.begin(), word.end())));
    });
    return complex_from_maximal(std::move(leaves), n_);
}

}  // namespace simplicia
