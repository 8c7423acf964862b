#pragma once

#include <set>
#include <vector>

#include "simplicia/label_trie.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

enum class OpStatus {
    applied,
    not_a_face,  // the simplex is not in the complex; nothing changed
    not_free,    // (tau, sigma) is not a free pair; nothing changed
    absorbed,    // the simplex is already a face of a maximal simplex; nothing changed
};

const char* to_string(OpStatus s);

/// Trie over the words of all faces of a complex. Nodes other than the root
/// are in bijection with the non-empty faces.
class SimplexTree {
public:
    SimplexTree() = default;
    explicit SimplexTree(const ComplexSpec& spec);

    /// Builds the tree of an arbitrary prefix-closed word set.
    static SimplexTree from_words(const std::vector<std::vector<Label>>& words, Label n = 0);

    bool contains(const Simplex& s) const;
    /// Inserts s together with all of its faces. Idempotent.
    void insert_full(const Simplex& s);
    /// Every face of the complex having s as a face, s included.
    std::set<Simplex> locate_cofaces(const Simplex& s) const;
    /// Removes s and its cofaces.
    OpStatus remove_face(const Simplex& s);
    OpStatus elementary_collapse(const Simplex& tau, const Simplex& sigma);
    /// Merges vertex u into v.
    void edge_contract(Label u, Label v);

    std::size_t node_count() const noexcept { return trie_.node_count(); }
    std::size_t edge_count() const noexcept { return trie_.edge_count(); }
    std::size_t leaf_count() const { return trie_.leaf_count(); }
    Label vertex_bound() const noexcept { return n_; }

    std::vector<Simplex> faces() const;
    ComplexSpec to_spec() const;
    const LabelTrie& trie() const noexcept { return trie_; }

private:
    void insert_suffixes(LabelTrie::NodeId node, const Simplex& s, std::size_t from);

    LabelTrie trie_;
    Label n_ = 0;
};

}  // namespace simplicia
