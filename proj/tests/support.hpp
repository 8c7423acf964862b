#pragma once

// Brute-force reference counts used by the tests. Everything is computed from
// the explicit face set, independently of the library's own counting code.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplicia/generators.hpp"
#include "simplicia/labeled_dag.hpp"
#include "simplicia/oracle.hpp"
#include "simplicia/types.hpp"

namespace testing {

using simplicia::ComplexSpec;
using simplicia::Label;
using simplicia::Simplex;

inline ComplexSpec spec_of(std::initializer_list<Simplex> maximal, Label n = 0) {
    return simplicia::complex_from_maximal(std::vector<Simplex>(maximal), n);
}

using Word = std::vector<Label>;
using Language = std::set<Word>;

/// Words w with sigma.w a face (labels of w all above last(sigma)); the
/// empty word included.
inline Language right_language(const std::set<Simplex>& faces, const Simplex& sigma) {
    Language out{Word{}};
    for (const auto& f : faces) {
        if (f.size() <= sigma.size()) continue;
        if (!std::equal(sigma.begin(), sigma.end(), f.begin())) continue;
        out.insert(Word(f.begin() + static_cast<long>(sigma.size()), f.end()));
    }
    return out;
}

struct BruteCounts {
    std::size_t msa_states = 0;
    std::size_t msa_transitions = 0;
    std::size_t cst_nodes = 0;
    std::size_t cst_edges = 0;
};

/// Minimal automaton = one state per distinct right language; compressed tree
/// = one node per distinct (incoming label, right language).
inline BruteCounts brute_counts(const ComplexSpec& spec) {
    auto faces = simplicia::oracle_faces(spec).faces;
    std::map<Language, std::size_t> states;
    std::map<std::pair<Label, Language>, std::size_t> nodes;
    auto children = [](const Language& l) {
        std::set<Label> first;
        for (const auto& w : l)
            if (!w.empty()) first.insert(w.front());
        return first.size();
    };
    auto visit = [&](Label label, const Simplex& s) {
        Language l = right_language(faces, s);
        std::size_t c = children(l);
        states.emplace(l, c);
        nodes.emplace(std::make_pair(label, l), c);
    };
    visit(0, Simplex{});
    for (const auto& f : faces) visit(f.last(), f);
    BruteCounts b;
    b.msa_states = states.size();
    for (const auto& [l, c] : states) b.msa_transitions += c;
    b.cst_nodes = nodes.size();
    for (const auto& [l, c] : nodes) b.cst_edges += c;
    return b;
}

/// Distinct non-empty prefixes of maximal words = MxST edges.
inline std::size_t brute_mxst_edges(const ComplexSpec& spec) {
    std::set<Word> prefixes;
    for (const auto& s : spec.maximal)
        for (std::size_t i = 1; i <= s.size(); ++i) prefixes.insert(Word(s.begin(), s.begin() + static_cast<long>(i)));
    return prefixes.size();
}

/// Gamma_j by counting, for each face with j+1 vertices, the maximal
/// simplices that contain it.
inline std::vector<std::size_t> brute_gamma(const ComplexSpec& spec) {
    std::vector<std::size_t> g(static_cast<std::size_t>(std::max(spec.dimension() + 1, 0)), 0);
    for (const auto& f : simplicia::oracle_faces(spec).faces) {
        std::size_t c = 0;
        for (const auto& s : spec.maximal) c += s.is_superset_of(f);
        g[f.size() - 1] = std::max(g[f.size() - 1], c);
    }
    return g;
}

/// Node count of the array list by listing node labels of each component:
/// level 0 has one node per vertex, level 1 one per pair (a, b) with a before
/// b plus (last, phi), level 2 one per triple plus (a, last, phi) plus
/// (last, phi, phi).
inline std::size_t brute_sal_nodes(const ComplexSpec& spec, int level) {
    std::size_t total = 0;
    for (const auto& s : spec.maximal) {
        std::size_t q = s.size();
        std::set<std::vector<std::size_t>> labels;
        if (level == 0) {
            for (std::size_t a = 0; a < q; ++a) labels.insert({a});
        } else if (level == 1) {
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t b = a + 1; b < q; ++b) labels.insert({a, b});
            labels.insert({q - 1, 99});
        } else {
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t b = a + 1; b < q; ++b)
                    for (std::size_t c = b + 1; c < q; ++c) labels.insert({a, b, c});
            for (std::size_t a = 0; a + 1 < q; ++a) labels.insert({a, q - 1, 99});
            labels.insert({q - 1, 99, 99});
        }
        total += labels.size();
    }
    return total;
}

/// Every non-empty subset of {1..n}.
inline std::vector<Simplex> all_candidates(Label n) {
    std::vector<Simplex> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Label> w;
        for (Label v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) w.push_back(v);
        out.push_back(Simplex::from_sorted(std::move(w)));
    }
    return out;
}

/// Random non-empty subset of s.
inline Simplex random_subset(simplicia::Rng& rng, const Simplex& s) {
    std::vector<Label> w;
    for (Label v : s)
        if (rng.uniform() < 0.5) w.push_back(v);
    if (w.empty()) w.push_back(s[rng.below(s.size())]);
    return Simplex::from_sorted(std::move(w));
}

/// Random non-empty subset of {1..n} with at most `max_size` labels.
inline Simplex random_simplex(simplicia::Rng& rng, Label n, std::size_t max_size) {
    std::set<Label> w;
    std::size_t want = 1 + rng.below(max_size);
    while (w.size() < want && w.size() < n) w.insert(static_cast<Label>(1 + rng.below(n)));
    return Simplex::from_sorted(std::vector<Label>(w.begin(), w.end()));
}

/// The corpus shared by the property tests: random complexes over a range of
/// sizes plus every named example that fits in n <= 10.
inline std::vector<ComplexSpec> corpus(std::size_t random_count, std::uint64_t seed, Label max_n = 10) {
    std::vector<ComplexSpec> out = {
        simplicia::basic_complex(),          simplicia::nonpure_complex(),
        simplicia::subset_copies(4),         simplicia::tetra_triangles(),
        simplicia::exponential_gap(3),       simplicia::exponential_gap(4),
        simplicia::prefix_fan(3, 3),         simplicia::prefix_fan(4, 2),
        simplicia::triangle_tetrahedron(false), simplicia::triangle_tetrahedron(true),
    };
    simplicia::Rng rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        Label n = static_cast<Label>(2 + rng.below(max_n - 1));
        std::size_t max_k = 1 + rng.below(8);
        std::size_t max_size = 1 + rng.below(n);
        out.push_back(simplicia::random_complex(rng, n, max_k, max_size));
    }
    return out;
}

/// Label words of every path that starts at a non-root node.
inline std::set<Simplex> path_faces(const simplicia::LabeledDag& dag) {
    std::set<Simplex> out;
    Word word;
    auto rec = [&](auto& self, std::size_t id) -> void {
        word.push_back(dag.nodes[id].label);
        out.insert(Simplex::from_sorted(word));
        for (std::size_t c : dag.nodes[id].children) self(self, c);
        word.pop_back();
    };
    for (std::size_t id = 0; id < dag.nodes.size(); ++id)
        if (id != dag.root) rec(rec, id);
    return out;
}

/// Edges not leaving the root.
inline std::size_t inner_edges(const simplicia::LabeledDag& dag) {
    return dag.edge_count() - dag.nodes[dag.root].children.size();
}

inline std::string words(const std::vector<Simplex>& list) {
    std::string s;
    for (const auto& x : list) s += x.to_string() + " ";
    return s;
}

}  // namespace testing
