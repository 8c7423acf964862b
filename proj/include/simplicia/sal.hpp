#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "simplicia/labeled_dag.hpp"
#include "simplicia/mxst.hpp"
#include "simplicia/simplex_tree.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

using SimplexKey = std::uint32_t;

/// Hands out the smallest unused positive key and recycles released ones.
class KeyAllocator {
public:
    SimplexKey acquire();
    void release(SimplexKey key);
    std::size_t live() const noexcept { return next_ - 1 - free_.size(); }

private:
    std::set<SimplexKey> free_;
    SimplexKey next_ = 1;
};

/// One array entry. `next` holds the labels following `vertex` in the node
/// label (kPhi where absent); level 0 leaves both at kPhi, level 1 uses
/// next[0] only.
struct SalEntry {
    Label next[2] = {kPhi, kPhi};
    SimplexKey key = 0;

    friend auto operator<=>(const SalEntry& a, const SalEntry& b) {
        return std::tie(a.next[0], a.next[1], a.key) <=> std::tie(b.next[0], b.next[1], b.key);
    }
    friend bool operator==(const SalEntry&, const SalEntry&) = default;
};

struct SalMembership {
    bool member = false;
    std::vector<SimplexKey> keys;  // maximal simplices containing the query
};

/// Simplex Array List of level 0, 1 or 2, embedded as one sorted array per
/// vertex. A node (v, next, key) lives in array A_v; edges are implied by the
/// successor rule and produced on demand by `materialize`.
class SimplexArrayList {
public:
    explicit SimplexArrayList(int level = 1) : level_(level) {}
    SimplexArrayList(const ComplexSpec& spec, int level);

    int level() const noexcept { return level_; }

    SalMembership membership(const Simplex& q) const;
    bool contains(const Simplex& q) const { return membership(q).member; }

    OpStatus insert_maximal(const Simplex& q);
    OpStatus remove_face(const Simplex& q);
    OpStatus elementary_collapse(const Simplex& tau, const Simplex& sigma);
    /// Merges vertex u into v, rebuilding only the components holding u.
    void edge_contract(Label u, Label v);

    std::size_t node_count() const noexcept { return nodes_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t component_count() const noexcept { return simplex_of_.size(); }

    const std::vector<SalEntry>& array(Label v) const;
    const Simplex& simplex(SimplexKey key) const { return simplex_of_.at(key); }
    const std::map<SimplexKey, Simplex>& components() const noexcept { return simplex_of_; }
    ComplexSpec to_spec() const;

    /// Explicit DAG: one node per entry, `origin` holding the key, edges by
    /// the successor rule. The root is node 0 and points at the entries of
    /// the first vertex of every component.
    LabeledDag materialize() const;

    /// Closed forms for one component built from a simplex with j+1 vertices.
    static std::size_t component_nodes(int level, std::size_t j);
    static std::size_t component_edges(int level, std::size_t j);

private:
    std::vector<SalEntry> entries_for(const Simplex& s, SimplexKey key, std::size_t position) const;
    void add_component(const Simplex& s);
    void erase_component(SimplexKey key);
    std::pair<std::size_t, std::size_t> range(Label v, Label a, Label b, bool match_b) const;

    int level_ = 1;
    std::vector<std::vector<SalEntry>> arrays_;  // indexed by vertex label
    std::map<SimplexKey, Simplex> simplex_of_;
    KeyAllocator keys_;
    std::size_t nodes_ = 0;
    std::size_t edges_ = 0;
};

/// Transforms applied to a rooted DAG built by `unprefix`.
/// Adds an edge from every non-root node to each node reachable from it.
LabeledDag transitive_closure(const LabeledDag& dag);
/// Replaces every non-root node x by one copy per out-edge (x, c), tagged with
/// the label and tag of c; a node without out-edges becomes a single copy
/// tagged with kPhi. Copy (x, c) points at every copy of c.
LabeledDag expand_representation(const LabeledDag& dag);

/// expand^(level) of the closure of the unprefixed tree.
LabeledDag sal_via_transforms(const MaximalSimplexTree& t, int level = 1);

/// Root-free canonical form of a SAL-shaped DAG: node identity is
/// (maximal simplex served, label, tag).
struct SalGraph {
    using Node = std::tuple<Simplex, Label, std::vector<Label>>;
    std::set<Node> nodes;
    std::set<std::pair<Node, Node>> edges;

    friend bool operator==(const SalGraph&, const SalGraph&) = default;
};

/// `origins[i]` is the simplex served by nodes with origin i.
SalGraph canonical_graph(const LabeledDag& dag, const std::vector<Simplex>& origins);
SalGraph canonical_graph(const SimplexArrayList& sal);

/// Gamma_0..Gamma_jmax; jmax is clamped to the dimension.
std::vector<std::size_t> gamma_profile(const ComplexSpec& spec, int j_max);

}  // namespace simplicia
