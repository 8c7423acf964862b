#include <doctest.h>

#include "simplicia/automaton.hpp"
#include "simplicia/compression.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/oracle.hpp"
#include "support.hpp"

using namespace simplicia;
using testing::spec_of;

namespace {

Dfa msa_of(const ComplexSpec& spec) { return minimize(sa_from_st(SimplexTree(spec))); }

// Chain automaton accepting every prefix of `word`.
Dfa chain(std::vector<Label> word) {
    Dfa a;
    a.transitions.resize(word.size() + 1);
    a.accepting.assign(word.size() + 1, 1);
    for (std::size_t i = 0; i < word.size(); ++i) a.transitions[i].push_back({word[i], static_cast<Dfa::StateId>(i + 1)});
    return a;
}

}  // namespace

TEST_SUITE("automaton") {

TEST_CASE("simplex automaton mirrors the tree") {
    auto sa = sa_from_st(SimplexTree(basic_complex()));
    CHECK(sa.state_count() == 28);
    CHECK(sa.transition_count() == 27);
    CHECK(sa_from_st(SimplexTree(spec_of({{1, 2}}))).state_count() == 4);
    CHECK(sa_from_st(SimplexTree()).state_count() == 1);
}

TEST_CASE("minimal automaton of the basic complex") {
    auto spec = basic_complex();
    auto msa = msa_of(spec);
    auto brute = testing::brute_counts(spec);
    CHECK(msa.state_count() == brute.msa_states);
    CHECK(msa.state_count() == 7);
    CHECK(msa.transition_count() == brute.msa_transitions);
    CHECK(isomorphic(msa, nerode_minimal_oracle(sa_from_st(SimplexTree(spec)))));
    CHECK(msa.sink_count() == 1);
}

TEST_CASE("minimize edge cases") {
    CHECK(msa_of(exponential_gap(3)).state_count() >= 8);
    auto c = chain({1, 2, 3});
    CHECK(minimize(c).state_count() == 4);
    auto msa = msa_of(basic_complex());
    CHECK(isomorphic(minimize(msa), msa));

    // Two disjoint edges: the depth-2 leaves share the empty right language.
    auto sa = sa_from_st(SimplexTree(spec_of({{1, 2}, {3, 4}})));
    auto m = minimize(sa);
    CHECK(m.state_count() < sa.state_count());
    CHECK(m.sink_count() == 1);

    Dfa cyclic;
    cyclic.transitions = {{{1, 1}}, {{2, 0}}};
    cyclic.accepting = {1, 1};
    CHECK_THROWS_AS(minimize(cyclic), std::invalid_argument);
}

TEST_CASE("minimize agrees with the Nerode oracle on random complexes") {
    for (const auto& spec : testing::corpus(60, 21)) {
        auto sa = sa_from_st(SimplexTree(spec));
        auto msa = minimize(sa);
        CHECK(isomorphic(msa, nerode_minimal_oracle(sa)));
        auto brute = testing::brute_counts(spec);
        CHECK(msa.state_count() == brute.msa_states);
        CHECK(msa.transition_count() == brute.msa_transitions);
    }
}

TEST_CASE("compressed simplex tree") {
    auto spec = basic_complex();
    auto cst = cst_from_msa(msa_of(spec));
    CHECK(cst.edge_count() == 19);
    CHECK(cst.node_count() == 8);
    auto brute = testing::brute_counts(spec);
    CHECK(cst.edge_count() == brute.cst_edges);
    CHECK(cst.node_count() == brute.cst_nodes);

    // Same words as the tree.
    auto words = cst.root_words();
    CHECK(words.size() == 28);

    auto graph = flag_complex(Graph{9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {1, 9}, {1, 4}, {2, 5}}});
    REQUIRE(graph.dimension() <= 1);
    CHECK(cst_from_msa(msa_of(graph)).edge_count() == SimplexTree(graph).edge_count());

    CHECK(cst_from_msa(msa_of(spec_of({{1, 2, 3, 4}}))).edge_count() < 15);
}

TEST_CASE("compressed tree equals merged tree on random complexes") {
    for (const auto& spec : testing::corpus(40, 5)) {
        auto cst = cst_from_msa(msa_of(spec));
        auto merged = merge_identical_subtrees(dag_from_trie(SimplexTree(spec).trie()));
        auto brute = testing::brute_counts(spec);
        CHECK(cst.edge_count() == brute.cst_edges);
        CHECK(cst.node_count() == brute.cst_nodes);
        CHECK(merged.edge_count() == brute.cst_edges);
        auto fast = count_face_structures(spec);
        CHECK(fast.cst_edges == brute.cst_edges);
        CHECK(fast.cst_nodes == brute.cst_nodes);
        CHECK(fast.msa_states == brute.msa_states);
        CHECK(fast.msa_transitions == brute.msa_transitions);
        CHECK(fast.st_edges == oracle_faces(spec).faces.size());
    }
}

TEST_CASE("automaton membership and updates") {
    auto msa = msa_of(basic_complex());
    CHECK(msa_membership(msa, {1, 4, 5}));
    CHECK_FALSE(msa_membership(msa, {2, 6}));
    CHECK(msa_membership(msa, Simplex{}));

    auto grown = msa_insert(msa, {1, 2});
    CHECK(isomorphic(grown, msa_of(oracle_insert(basic_complex(), {1, 2}))));

    auto cut = msa_remove(msa, {1, 3});
    CHECK(isomorphic(cut, msa_of(spec_of({{2, 3, 4, 5}, {1, 4, 5}, {1, 6}, {3, 6}}))));
    CHECK(isomorphic(msa_remove(msa, {1, 2}), msa));

    auto tree = expand_to_tree(msa);
    CHECK(tree.edge_count() == 27);
}

TEST_CASE("maximal-word automaton") {
    auto nonpure = nonpure_complex();
    CHECK(msa_of(nonpure).state_count() < mxsa_minimize(nonpure).state_count());
    CHECK(mxsa_minimize(spec_of({{1, 2, 3}})).state_count() == 4);
}

TEST_CASE("pure complexes: MSA at least as large as the maximal-word automaton") {
    int pure_seen = 0;
    for (const auto& spec : testing::corpus(120, 8)) {
        if (!spec.is_pure() || spec.empty()) continue;
        ++pure_seen;
        CHECK(msa_of(spec).state_count() >= mxsa_minimize(spec).state_count());
    }
    CHECK(pure_seen > 5);
}

TEST_CASE("ratios") {
    CHECK(Ratio::of(27, 19).format(1) == "1.4");
    CHECK(Ratio::of(6, 4) == Ratio{3, 2});
    CHECK(Ratio::of(1, 8).format(2) == "0.13");
    CHECK(Ratio::of(5, 0).value() == 0.0);
    CHECK(Ratio::of(2, 1).format(0) == "2");
}

TEST_CASE("compression report") {
    auto r = compression_report(basic_complex());
    CHECK(r.st == 27);
    CHECK(r.cst == 19);
    CHECK(r.mxst == 9);
    CHECK(r.msa_states == 7);
    CHECK(r.rho_st == Ratio::of(27, 19));
    auto empty = compression_report(ComplexSpec{});
    CHECK(empty.st == 0);
    CHECK(empty.mxst == 0);
}

}
