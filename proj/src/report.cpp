#include "simplicia/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "simplicia/automaton.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/labeling.hpp"
#include "simplicia/mxst.hpp"
#include "simplicia/oracle.hpp"
#include "simplicia/sal.hpp"
#include "simplicia/simplex_tree.hpp"

namespace simplicia {

std::string Table::render(bool csv) const {
    const char sep = csv ? ',' : '\t';
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << sep;
            out << cells[i];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
}

StatsRow stats_row(const ComplexSpec& spec, std::string param_name, std::string param_value) {
    StatsRow r;
    r.n = spec.n;
    r.param_name = std::move(param_name);
    r.param_value = std::move(param_value);
    r.d = spec.dimension();
    r.k = spec.k();
    r.sizes = compression_report(spec);
    return r;
}

Table stats_table(const std::vector<StatsRow>& rows, int precision) {
    Table t;
    t.header = {"n"};
    bool param = !rows.empty() && !rows.front().param_name.empty();
    if (param) t.header.push_back(rows.front().param_name);
    for (const char* h : {"d", "k", "|ST|", "|MxST|", "|C(ST)|", "rho_ST", "|C(MxST)|", "rho_MxST"}) t.header.push_back(h);
    for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n)};
        if (param) cells.push_back(r.param_value);
        cells.push_back(std::to_string(r.d));
        cells.push_back(std::to_string(r.k));
        cells.push_back(std::to_string(r.sizes.st));
        cells.push_back(std::to_string(r.sizes.mxst));
        cells.push_back(std::to_string(r.sizes.cst));
        cells.push_back(r.sizes.rho_st.format(precision));
        cells.push_back(std::to_string(r.sizes.cmxst));
        cells.push_back(r.sizes.rho_mxst.format(precision));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

GammaRow gamma_row(const ComplexSpec& spec, std::string param_name, std::string param_value) {
    GammaRow r;
    r.n = spec.n;
    r.param_name = std::move(param_name);
    r.param_value = std::move(param_value);
    r.d = spec.dimension();
    r.k = spec.k();
    r.m = count_face_structures(spec).st_edges;
    r.gamma = gamma_profile(spec, 3);
    r.sal_edges = SimplexArrayList(spec, 1).edge_count();
    return r;
}

Table gamma_table(const std::vector<GammaRow>& rows) {
    Table t;
    t.header = {"n"};
    bool param = !rows.empty() && !rows.front().param_name.empty();
    if (param) t.header.push_back(rows.front().param_name);
    for (const char* h : {"d", "k", "m", "Gamma_0", "Gamma_1", "Gamma_2", "Gamma_3", "|SAL|"}) t.header.push_back(h);
    for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n)};
        if (param) cells.push_back(r.param_value);
        cells.push_back(std::to_string(r.d));
        cells.push_back(std::to_string(r.k));
        cells.push_back(std::to_string(r.m));
        for (std::size_t j = 0; j < 4; ++j) cells.push_back(j < r.gamma.size() ? std::to_string(r.gamma[j]) : "-");
        cells.push_back(std::to_string(r.sal_edges));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

namespace {

class Checks {
public:
    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back(CheckItem{std::move(name), ok, ok ? std::string() : std::move(detail)});
    }
    std::vector<CheckItem> items;
};

std::string pair_text(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

std::vector<Simplex> all_candidates(Label n) {
    std::vector<Simplex> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Label> w;
        for (Label v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) w.push_back(v);
        out.push_back(Simplex::from_sorted(std::move(w)));
    }
    return out;
}

std::set<std::vector<Label>> path_words(const LabeledDag& dag) {
    std::set<std::vector<Label>> words;
    std::vector<Label> word;
    auto rec = [&](auto& self, std::size_t id) -> void {
        word.push_back(dag.nodes[id].label);
        words.insert(word);
        for (std::size_t c : dag.nodes[id].children) self(self, c);
        word.pop_back();
    };
    for (std::size_t id = 0; id < dag.nodes.size(); ++id)
        if (id != dag.root) rec(rec, id);
    return words;
}

}  // namespace

std::vector<CheckItem> check_complex(const ComplexSpec& spec, const CheckOptions& options) {
    Checks c;
    const int d = spec.dimension();
    const std::size_t k = spec.k();
    c.add("spec-antichain", complex_from_maximal(spec.maximal, spec.n) == spec, "maximal list is not a reduced antichain");

    auto counts = count_face_structures(spec);
    const std::uint64_t m = counts.st_edges;

    auto gamma = gamma_profile(spec, d);
    bool chain = true;
    if (!spec.empty()) {
        chain = gamma.front() <= k && gamma.back() == 1;
        for (std::size_t j = 1; j < gamma.size(); ++j) chain = chain && gamma[j] <= gamma[j - 1];
    }
    c.add("gamma-chain", chain, "Gamma values are not a non-increasing chain from <= k down to 1");

    MaximalSimplexTree mx(spec);
    c.add("mxst-leaves", mx.leaf_count() == k, pair_text(mx.leaf_count(), k));
    c.add("mxst-edge-bound", mx.edge_count() <= k * static_cast<std::size_t>(d + 1),
          pair_text(mx.edge_count(), k * static_cast<std::size_t>(d + 1)));
    if (options.expect_no_mxst_merge)
        c.add("mxst-no-merge", mx.compressed_edge_count() == mx.edge_count(),
              pair_text(mx.compressed_edge_count(), mx.edge_count()));

    for (int level = 0; level <= 2; ++level) {
        SimplexArrayList sal(spec, level);
        std::size_t entries = 0;
        for (Label v = 0; v <= spec.n; ++v) entries += sal.array(v).size();
        std::size_t formula_nodes = 0, formula_edges = 0;
        for (const auto& s : spec.maximal) {
            std::size_t j = s.size() - 1;
            if (level == 0) {
                formula_nodes += j + 1;
                formula_edges += j;
            } else if (level == 1) {
                formula_nodes += j * (j + 1) / 2 + 1;
                formula_edges += j * (j * j + 5) / 6;
            } else {
                formula_nodes += j * (j * j + 5) / 6 + 1;
                formula_edges += SimplexArrayList::component_edges(2, j);
            }
        }
        std::string name = "sal" + std::to_string(level);
        c.add(name + "-nodes", entries == formula_nodes && sal.node_count() == formula_nodes,
              pair_text(entries, formula_nodes));
        c.add(name + "-edges", sal.edge_count() == formula_edges, pair_text(sal.edge_count(), formula_edges));
        if (m <= options.explicit_face_limit) {
            auto dag = sal.materialize();
            std::size_t explicit_edges = dag.edge_count() - dag.nodes[dag.root].children.size();
            c.add(name + "-materialized-edges", explicit_edges == sal.edge_count(),
                  pair_text(explicit_edges, sal.edge_count()));
        }
    }

    {
        // Array list sizes do not depend on the labeling.
        SimplexArrayList base(spec, 1);
        Labeling reverse = Labeling::identity(spec.n);
        std::reverse(reverse.image.begin() + 1, reverse.image.end());
        bool same = true;
        for (const auto& l : {heuristic_labeling(spec), reverse}) {
            SimplexArrayList other(relabel(spec, l), 1);
            same = same && other.node_count() == base.node_count() && other.edge_count() == base.edge_count();
        }
        c.add("sal-label-invariance", same, "relabelled array list has a different size");
    }

    if (m <= options.explicit_face_limit) {
        SimplexTree st(spec);
        c.add("st-size", st.edge_count() == m, pair_text(st.edge_count(), m));
        if (!spec.empty())
            c.add("st-leaf-half", 2 * st.leaf_count() >= st.node_count(), pair_text(2 * st.leaf_count(), st.node_count()));
        Dfa sa = sa_from_st(st);
        Dfa msa = minimize(sa);
        c.add("msa-count-route", msa.state_count() == counts.msa_states && msa.transition_count() == counts.msa_transitions,
              pair_text(msa.state_count(), counts.msa_states));
        c.add("msa-one-sink", spec.empty() || msa.sink_count() == 1, std::to_string(msa.sink_count()) + " sinks");
        c.add("msa-state-bound", 2 * msa.state_count() <= (m + 1) + 2, pair_text(2 * msa.state_count(), m + 3));
        std::size_t cst_a = cst_from_msa(msa).edge_count();
        std::size_t cst_b = merge_identical_subtrees(dag_from_trie(st.trie())).edge_count();
        c.add("cst-agreement", cst_a == cst_b && cst_a == counts.cst_edges, pair_text(cst_a, cst_b));
        if (sa.state_count() <= 5000) c.add("msa-nerode", isomorphic(msa, nerode_minimal_oracle(sa)), "minimize differs from oracle");
        if (spec.is_pure() && !spec.empty()) {
            std::size_t mx_states = mxsa_minimize(spec).state_count();
            c.add("pure-msa-vs-mxsa", msa.state_count() >= mx_states, pair_text(msa.state_count(), mx_states));
            if (static_cast<int>(k) < d && d >= 2)
                c.add("pure-strict-compression", msa.state_count() < sa.state_count(),
                      pair_text(msa.state_count(), sa.state_count()));
        }
    }

    if (d > 1 && spec.n <= 8) {
        // Stops at the first labeling whose compressed tree is smaller.
        std::vector<Label> perm(spec.n);
        std::iota(perm.begin(), perm.end(), Label{1});
        std::uint64_t best = m;
        do {
            Labeling l{{0}};
            l.image.insert(l.image.end(), perm.begin(), perm.end());
            best = std::min(best, count_face_structures(relabel(spec, l)).cst_edges);
        } while (best == m && std::next_permutation(perm.begin(), perm.end()));
        c.add("some-labeling-compresses", best < m, pair_text(best, m));
    }

    if (spec.n <= 10) {
        OracleComplex o = oracle_faces(spec);
        SimplexTree st(spec);
        Dfa msa = minimize(sa_from_st(st));
        std::vector<SimplexArrayList> sals;
        for (int level = 0; level <= 2; ++level) sals.emplace_back(spec, level);
        std::string wrong;
        for (const auto& q : all_candidates(spec.n)) {
            bool expect = oracle_membership(o, q);
            if (st.contains(q) != expect) wrong = "ST " + q.to_string();
            if (msa_membership(msa, q) != expect) wrong = "MSA " + q.to_string();
            if (mx.contains(q) != expect) wrong = "MxST " + q.to_string();
            for (const auto& s : sals)
                if (s.contains(q) != expect) wrong = "SAL" + std::to_string(s.level()) + " " + q.to_string();
            if (!wrong.empty()) break;
        }
        c.add("oracle-membership", wrong.empty(), wrong);

        std::set<std::vector<Label>> faces;
        for (const auto& f : o.faces) faces.insert(f.word());
        c.add("sal-paths-are-faces", path_words(sals[1].materialize()) == faces, "path words differ from the face set");

        auto maximal = mx.maximal();
        bool same = true;
        for (int level = 0; level <= 2; ++level)
            same = same && canonical_graph(sal_via_transforms(mx, level), maximal) == canonical_graph(sals[level]);
        c.add("transforms-match-direct", same, "transform pipeline differs from the direct build");
    }
    return c.items;
}

std::vector<CheckItem> check_st_dump(Label n, const std::vector<Simplex>& faces, const ComplexSpec* reference) {
    Checks c;
    std::set<Simplex> set(faces.begin(), faces.end());
    c.add("st-dump-distinct", set.size() == faces.size(), "a face is listed twice");
    std::string missing;
    for (const auto& f : set) {
        for (Label v : f) {
            Simplex sub = f.without(v);
            if (!sub.empty() && !set.contains(sub)) {
                missing = sub.to_string() + " (face of " + f.to_string() + ")";
                break;
            }
        }
        if (!missing.empty()) break;
    }
    c.add("st-closure", missing.empty(), "missing " + missing);
    bool bounded = std::all_of(set.begin(), set.end(), [&](const Simplex& s) { return s.last() <= n; });
    c.add("st-labels-bounded", bounded, "label above n");
    if (reference) {
        auto expect = oracle_faces(*reference).faces;
        c.add("st-matches-complex", expect == set, pair_text(set.size(), expect.size()));
    }
    return c.items;
}

namespace {

struct Script {
    std::vector<Simplex> queries;
    std::vector<Simplex> inserts;
    std::vector<Simplex> removals;
    std::vector<std::pair<Simplex, Simplex>> collapses;
    std::vector<std::pair<Label, Label>> contractions;
};

Simplex random_subset(Rng& rng, const Simplex& s) {
    std::vector<Label> w;
    for (Label v : s)
        if (rng.uniform() < 0.5) w.push_back(v);
    if (w.empty()) w.push_back(s[rng.below(s.size())]);
    return Simplex::from_sorted(std::move(w));
}

Simplex random_set(Rng& rng, Label n, std::size_t max_size) {
    std::set<Label> w;
    std::size_t size = 1 + rng.below(std::max<std::size_t>(1, max_size));
    while (w.size() < size) w.insert(static_cast<Label>(1 + rng.below(n)));
    return Simplex::from_sorted(std::vector<Label>(w.begin(), w.end()));
}

Script make_script(const ComplexSpec& spec, const BenchOptions& o) {
    Script s;
    Rng rng(o.seed);
    if (spec.empty()) return s;
    const std::size_t dim = static_cast<std::size_t>(spec.dimension()) + 1;
    for (std::size_t i = 0; i < o.queries; ++i)
        s.queries.push_back(i % 2 ? random_set(rng, spec.n, dim) : random_subset(rng, spec.maximal[rng.below(spec.k())]));
    for (std::size_t i = 0; i < o.operations; ++i) {
        s.inserts.push_back(random_set(rng, spec.n, std::min<std::size_t>(dim, 4)));
        s.removals.push_back(random_subset(rng, spec.maximal[rng.below(spec.k())]));
        const Simplex& tau = spec.maximal[rng.below(spec.k())];
        if (tau.size() >= 2) s.collapses.emplace_back(tau, tau.without(tau[rng.below(tau.size())]));
        Label u = static_cast<Label>(1 + rng.below(spec.n));
        Label v = static_cast<Label>(1 + rng.below(spec.n));
        s.contractions.emplace_back(u, v);
    }
    return s;
}

// Uniform view over the structures so one script drives all of them.
struct Subject {
    std::string name;
    std::function<void(const ComplexSpec&)> build;
    std::function<bool(const Simplex&)> member;
    std::function<void(const Simplex&)> insert;
    std::function<void(const Simplex&)> remove;
    std::function<void(const Simplex&, const Simplex&)> collapse;
    std::function<void(Label, Label)> contract;
    std::function<ComplexSpec()> result;
};

std::vector<Subject> subjects(bool explicit_faces) {
    std::vector<Subject> out;
    if (explicit_faces) {
        auto st = std::make_shared<SimplexTree>();
        out.push_back(Subject{
            "ST", [st](const ComplexSpec& s) { *st = SimplexTree(s); },
            [st](const Simplex& q) { return st->contains(q); }, [st](const Simplex& q) { st->insert_full(q); },
            [st](const Simplex& q) { st->remove_face(q); },
            [st](const Simplex& t, const Simplex& s) { st->elementary_collapse(t, s); },
            [st](Label u, Label v) { st->edge_contract(u, v); }, [st] { return st->to_spec(); }});
        auto msa = std::make_shared<Dfa>();
        out.push_back(Subject{
            "MSA", [msa](const ComplexSpec& s) { *msa = minimize(sa_from_st(SimplexTree(s))); },
            [msa](const Simplex& q) { return msa_membership(*msa, q); },
            [msa](const Simplex& q) { *msa = msa_insert(*msa, q); },
            [msa](const Simplex& q) { *msa = msa_remove(*msa, q); },
            [msa](const Simplex& t, const Simplex& s) {
                SimplexTree tree = expand_to_tree(*msa);
                if (tree.elementary_collapse(t, s) == OpStatus::applied) *msa = minimize(sa_from_st(tree));
            },
            [msa](Label u, Label v) {
                SimplexTree tree = expand_to_tree(*msa);
                tree.edge_contract(u, v);
                *msa = minimize(sa_from_st(tree));
            },
            [msa] { return expand_to_tree(*msa).to_spec(); }});
    }
    auto mx = std::make_shared<MaximalSimplexTree>();
    out.push_back(Subject{
        "MxST", [mx](const ComplexSpec& s) { *mx = MaximalSimplexTree(s); },
        [mx](const Simplex& q) { return mx->contains(q); }, [mx](const Simplex& q) { mx->insert(q); },
        [mx](const Simplex& q) { mx->remove_face(q); },
        [mx](const Simplex& t, const Simplex& s) { mx->elementary_collapse(t, s); },
        [mx](Label u, Label v) { mx->edge_contract(u, v); }, [mx] { return mx->to_spec(); }});
    for (int level = 0; level <= 2; ++level) {
        auto sal = std::make_shared<SimplexArrayList>(level);
        out.push_back(Subject{
            "SAL" + std::to_string(level), [sal, level](const ComplexSpec& s) { *sal = SimplexArrayList(s, level); },
            [sal](const Simplex& q) { return sal->contains(q); }, [sal](const Simplex& q) { sal->insert_maximal(q); },
            [sal](const Simplex& q) { sal->remove_face(q); },
            [sal](const Simplex& t, const Simplex& s) { sal->elementary_collapse(t, s); },
            [sal](Label u, Label v) { sal->edge_contract(u, v); }, [sal] { return sal->to_spec(); }});
    }
    return out;
}

// Operations return complexes without the vertex bound, so compare maximal lists only.
bool same_complex(const ComplexSpec& a, const ComplexSpec& b) { return a.maximal == b.maximal; }

template <class F>
double time_us(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
}

std::string fixed(double x) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << x;
    return s.str();
}

}  // namespace

BenchResult run_bench(const ComplexSpec& spec, const BenchOptions& options) {
    BenchResult r;
    r.timings.header = {"structure", "build_us", "member_us", "insert_us", "remove_us", "collapse_us", "contract_us"};
    Script script = make_script(spec, options);
    const bool explicit_faces = count_face_structures(spec).st_edges <= 2000000;

    std::vector<bool> reference_answers;
    std::vector<ComplexSpec> reference_results;
    bool have_reference = false;
    for (auto& subject : subjects(explicit_faces)) {
        std::vector<std::vector<double>> samples(6);
        std::vector<bool> answers;
        std::vector<ComplexSpec> results;
        for (std::size_t run = 0; run < std::max<std::size_t>(1, options.runs); ++run) {
            answers.clear();
            results.clear();
            samples[0].push_back(time_us([&] { subject.build(spec); }));
            samples[1].push_back(time_us([&] {
                for (const auto& q : script.queries) answers.push_back(subject.member(q));
            }));
            samples[2].push_back(time_us([&] {
                for (const auto& q : script.inserts) subject.insert(q);
            }));
            results.push_back(subject.result());
            subject.build(spec);
            samples[3].push_back(time_us([&] {
                for (const auto& q : script.removals) subject.remove(q);
            }));
            results.push_back(subject.result());
            subject.build(spec);
            samples[4].push_back(time_us([&] {
                for (const auto& [t, s] : script.collapses) subject.collapse(t, s);
            }));
            results.push_back(subject.result());
            subject.build(spec);
            samples[5].push_back(time_us([&] {
                for (const auto& [u, v] : script.contractions) subject.contract(u, v);
            }));
            results.push_back(subject.result());
        }
        std::vector<std::string> row{subject.name};
        const std::size_t counts[6] = {1, script.queries.size(), script.inserts.size(), script.removals.size(),
                                       script.collapses.size(), script.contractions.size()};
        for (std::size_t i = 0; i < 6; ++i) row.push_back(fixed(median(samples[i]) / std::max<std::size_t>(1, counts[i])));
        r.timings.rows.push_back(std::move(row));

        if (!have_reference) {
            reference_answers = answers;
            reference_results = results;
            have_reference = true;
            continue;
        }
        if (answers != reference_answers) {
            r.consistent = false;
            r.mismatch = subject.name + ": membership answers differ";
        }
        for (std::size_t i = 0; i < results.size(); ++i)
            if (!same_complex(results[i], reference_results[i])) {
                r.consistent = false;
                r.mismatch = subject.name + ": operation script " + std::to_string(i) + " gives a different complex";
            }
    }
    return r;
}

}  // namespace simplicia
