#pragma once

#include <set>
#include <vector>

#include "simplicia/label_trie.hpp"
#include "simplicia/labeled_dag.hpp"
#include "simplicia/simplex_tree.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

/// Maximal simplices containing a query simplex. Empty when the query is not
/// a face of the complex.
struct CofaceResult {
    std::set<Simplex> cofaces;
    std::size_t count = 0;
};

/// Trie over the words of the maximal simplices only. Leaves are in
/// bijection with the maximal simplices.
class MaximalSimplexTree {
public:
    MaximalSimplexTree() = default;
    explicit MaximalSimplexTree(const ComplexSpec& spec);

    bool contains(const Simplex& s) const;
    CofaceResult maximal_cofaces(const Simplex& s) const;

    /// Adds s as a maximal simplex and drops the maximal simplices it
    /// contains. Returns absorbed (and changes nothing) when s is a face of
    /// an existing maximal simplex.
    OpStatus insert(const Simplex& s);
    OpStatus remove_face(const Simplex& s);
    OpStatus elementary_collapse(const Simplex& tau, const Simplex& sigma);
    /// Merges vertex u into v.
    void edge_contract(Label u, Label v);

    std::size_t node_count() const noexcept { return trie_.node_count(); }
    std::size_t edge_count() const noexcept { return trie_.edge_count(); }
    std::size_t leaf_count() const { return trie_.leaf_count(); }
    /// Edge count after merging identical subtrees.
    std::size_t compressed_edge_count() const;
    Label vertex_bound() const noexcept { return n_; }

    /// Maximal simplices in lexicographic order.
    std::vector<Simplex> maximal() const;
    ComplexSpec to_spec() const;
    const LabelTrie& trie() const noexcept { return trie_; }

private:
    void erase_maximal(const Simplex& s) { trie_.remove_branch(s.labels()); }
    void insert_unchecked(const Simplex& s);

    LabelTrie trie_;
    Label n_ = 0;
};

/// Splits the tree into one chain per maximal simplex hanging from the root.
/// Each non-root node records the lexicographic index of its maximal simplex
/// in `origin`.
LabeledDag unprefix(const MaximalSimplexTree& t);

}  // namespace simplicia
