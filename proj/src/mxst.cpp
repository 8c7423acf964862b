#include "simplicia/mxst.hpp"

#include <algorithm>

namespace simplicia {

MaximalSimplexTree::MaximalSimplexTree(const ComplexSpec& spec) : n_(spec.n) {
    for (const auto& m : spec.maximal) trie_.add_path(m.labels());
}

CofaceResult MaximalSimplexTree::maximal_cofaces(const Simplex& s) const {
    CofaceResult r;
    std::vector<Label> word;
    auto collect = [&](auto& self, LabelTrie::NodeId node) -> void {
        if (trie_.is_leaf(node)) {
            r.cofaces.insert(Simplex::from_sorted(word));
            return;
        }
        for (auto [l, c] : trie_.children(node)) {
            word.push_back(l);
            self(self, c);
            word.pop_back();
        }
    };
    auto walk = [&](auto& self, LabelTrie::NodeId node, std::size_t matched) -> void {
        if (matched == s.size()) {
            collect(collect, node);
            return;
        }
        for (auto [l, c] : trie_.children(node)) {
            if (l > s[matched]) break;
            word.push_back(l);
            self(self, c, l == s[matched] ? matched + 1 : matched);
            word.pop_back();
        }
    };
    walk(walk, LabelTrie::kRoot, 0);
    r.count = r.cofaces.size();
    return r;
}

bool MaximalSimplexTree::contains(const Simplex& s) const {
    if (s.empty()) return true;
    return maximal_cofaces(s).count > 0;
}

void MaximalSimplexTree::insert_unchecked(const Simplex& s) {
    // Drop the maximal simplices contained in s: their words only use labels of s.
    std::vector<Simplex> inside;
    std::vector<Label> word;
    auto rec = [&](auto& self, LabelTrie::NodeId node) -> void {
        if (node != LabelTrie::kRoot && trie_.is_leaf(node)) {
            inside.push_back(Simplex::from_sorted(word));
            return;
        }
        for (auto [l, c] : trie_.children(node)) {
            if (!s.contains(l)) continue;
            word.push_back(l);
            self(self, c);
            word.pop_back();
        }
    };
    rec(rec, LabelTrie::kRoot);
    for (const auto& m : inside) erase_maximal(m);
    trie_.add_path(s.labels());
    n_ = std::max(n_, s.last());
}

OpStatus MaximalSimplexTree::insert(const Simplex& s) {
    if (s.empty() || contains(s)) return OpStatus::absorbed;
    insert_unchecked(s);
    return OpStatus::applied;
}

OpStatus MaximalSimplexTree::remove_face(const Simplex& s) {
    if (s.empty()) return OpStatus::not_a_face;
    auto cof = maximal_cofaces(s);
    if (cof.count == 0) return OpStatus::not_a_face;
    for (const auto& g : cof.cofaces) erase_maximal(g);
    std::vector<Simplex> facets;
    for (const auto& g : cof.cofaces)
        for (Label v : s) facets.push_back(g.without(v));
    std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    for (const auto& f : facets) insert(f);
    return OpStatus::applied;
}

OpStatus MaximalSimplexTree::elementary_collapse(const Simplex& tau, const Simplex& sigma) {
    if (sigma.empty() || tau.size() != sigma.size() + 1 || !tau.is_superset_of(sigma)) return OpStatus::not_free;
    auto cof = maximal_cofaces(sigma);
    if (cof.count != 1 || *cof.cofaces.begin() != tau) return OpStatus::not_free;
    erase_maximal(tau);
    for (Label v : sigma) insert(tau.without(v));
    return OpStatus::applied;
}

void MaximalSimplexTree::edge_contract(Label u, Label v) {
    if (u == v) return;
    std::vector<Simplex> relabeled;
    for (const auto& m : maximal()) {
        if (!m.contains(u)) {
            relabeled.push_back(m);
            continue;
        }
        std::vector<Label> w(m.begin(), m.end());
        std::replace(w.begin(), w.end(), u, v);
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        relabeled.push_back(Simplex::from_sorted(std::move(w)));
    }
    std::stable_sort(relabeled.begin(), relabeled.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    trie_.clear();
    for (const auto& s : relabeled) insert(s);
}

std::size_t MaximalSimplexTree::compressed_edge_count() const {
    return merge_identical_subtrees(dag_from_trie(trie_)).edge_count();
}

std::vector<Simplex> MaximalSimplexTree::maximal() const {
    std::vector<Simplex> out;
    trie_.for_each_word([&](LabelTrie::NodeId id, std::span<const Label> word) {
        if (trie_.is_leaf(id)) out.push_back(Simplex::from_sorted(std::vector<Label>(word.begin(), word.end())));
    });
    return out;
}

ComplexSpec MaximalSimplexTree::to_spec() const {
    ComplexSpec spec;
    spec.n = n_;
    spec.maximal = maximal();
    return spec;
}

LabeledDag unprefix(const MaximalSimplexTree& t) {
    LabeledDag dag;
    dag.nodes.emplace_back();
    auto maximal = t.maximal();
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        std::size_t parent = dag.root;
        for (Label l : maximal[i]) {
            std::size_t id = dag.nodes.size();
            dag.nodes.push_back(DagNode{l, {}, i, {}});
            dag.nodes[parent].children.push_back(id);
            parent = id;
        }
    }
    return dag;
}

}  // namespace simplicia
