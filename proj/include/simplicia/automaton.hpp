#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "simplicia/labeled_dag.hpp"
#include "simplicia/simplex_tree.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

enum class StructureKind { ST, CST, SA, MSA, MxST, CMxST, SAL0, SAL1, SAL2 };

const char* to_string(StructureKind k);

/// Size counts of one structure. Trees and DAGs fill nodes/edges, automata
/// fill states/transitions.
struct SizeReport {
    StructureKind which = StructureKind::ST;
    std::size_t states = 0;
    std::size_t transitions = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
};

/// Deterministic automaton with a partial transition function. Transitions of
/// each state are kept sorted by label.
struct Dfa {
    using StateId = std::uint32_t;
    static constexpr StateId kNone = UINT32_MAX;

    std::vector<std::vector<std::pair<Label, StateId>>> transitions;
    std::vector<char> accepting;
    StateId initial = 0;

    std::size_t state_count() const noexcept { return transitions.size(); }
    std::size_t transition_count() const noexcept;
    StateId next(StateId s, Label a) const;
    bool accepts(std::span<const Label> word) const;
    /// Number of states without outgoing transitions.
    std::size_t sink_count() const;
    SizeReport size(StructureKind which) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// One state per tree node, one transition per edge, all states accepting.
Dfa sa_from_st(const SimplexTree& t);

/// Unique minimal automaton of an acyclic automaton, computed by partition
/// refinement. The initial partition separates sinks from the other states
/// (and accepting from non-accepting ones). Unreachable and useless states
/// are dropped first. Throws std::invalid_argument on cyclic input.
Dfa minimize(const Dfa& a);

/// Minimal automaton computed by grouping states with equal right languages,
/// each language enumerated explicitly. Test oracle for `minimize`.
Dfa nerode_minimal_oracle(const Dfa& a);

/// Renumbers states in breadth-first order from the initial state, visiting
/// transitions by increasing label. Unreachable states are dropped.
Dfa canonical_form(const Dfa& a);
bool isomorphic(const Dfa& a, const Dfa& b);

/// Unfolds a minimal simplex automaton into a node-labelled DAG where every
/// node has a single incoming label: the compressed simplex tree.
LabeledDag cst_from_msa(const Dfa& msa);

/// Expands an automaton of a finite prefix-closed language back into its trie.
SimplexTree expand_to_tree(const Dfa& a);

bool msa_membership(const Dfa& msa, const Simplex& s);
/// Expand, insert s with all its faces, recompress.
Dfa msa_insert(const Dfa& msa, const Simplex& s);
/// Expand, remove s and its cofaces, recompress. Unchanged if s is not a face.
Dfa msa_remove(const Dfa& msa, const Simplex& s);

/// Minimal automaton accepting exactly the words of the maximal simplices.
Dfa mxsa_minimize(const ComplexSpec& spec);

}  // namespace simplicia
