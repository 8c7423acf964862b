#include "simplicia/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace simplicia {

const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::ST: return "ST";
        case StructureKind::CST: return "C(ST)";
        case StructureKind::SA: return "SA";
        case StructureKind::MSA: return "M(SA)";
        case StructureKind::MxST: return "MxST";
        case StructureKind::CMxST: return "C(MxST)";
        case StructureKind::SAL0: return "0-SAL";
        case StructureKind::SAL1: return "SAL";
        case StructureKind::SAL2: return "2-SAL";
    }
    return "?";
}

std::size_t Dfa::transition_count() const noexcept {
    std::size_t t = 0;
    for (const auto& row : transitions) t += row.size();
    return t;
}

Dfa::StateId Dfa::next(StateId s, Label a) const {
    const auto& row = transitions[s];
    auto it = std::lower_bound(row.begin(), row.end(), a, [](const auto& p, Label l) { return p.first < l; });
    return it != row.end() && it->first == a ? it->second : kNone;
}

bool Dfa::accepts(std::span<const Label> word) const {
    if (transitions.empty()) return false;
    StateId s = initial;
    for (Label a : word) {
        s = next(s, a);
        if (s == kNone) return false;
    }
    return accepting[s] != 0;
}

std::size_t Dfa::sink_count() const {
    return static_cast<std::size_t>(
        std::count_if(transitions.begin(), transitions.end(), [](const auto& row) { return row.empty(); }));
}

SizeReport Dfa::size(StructureKind which) const {
    SizeReport r;
    r.which = which;
    r.states = state_count();
    r.transitions = transition_count();
    return r;
}

Dfa sa_from_st(const SimplexTree& t) {
    const LabelTrie& trie = t.trie();
    Dfa a;
    a.transitions.emplace_back();
    a.accepting.push_back(1);
    auto rec = [&](auto& self, LabelTrie::NodeId node, Dfa::StateId state) -> void {
        for (auto [l, c] : trie.children(node)) {
            auto child = static_cast<Dfa::StateId>(a.transitions.size());
            a.transitions.emplace_back();
            a.accepting.push_back(1);
            a.transitions[state].emplace_back(l, child);
            self(self, c, child);
        }
    };
    rec(rec, LabelTrie::kRoot, 0);
    return a;
}

Dfa canonical_form(const Dfa& a) {
    Dfa out;
    if (a.transitions.empty()) return out;
    std::vector<Dfa::StateId> number(a.state_count(), Dfa::kNone);
    std::vector<Dfa::StateId> order{a.initial};
    number[a.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto [l, t] : a.transitions[order[i]])
            if (number[t] == Dfa::kNone) {
                number[t] = static_cast<Dfa::StateId>(order.size());
                order.push_back(t);
            }
    out.transitions.resize(order.size());
    out.accepting.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.accepting[i] = a.accepting[order[i]] ? 1 : 0;
        for (auto [l, t] : a.transitions[order[i]]) out.transitions[i].emplace_back(l, number[t]);
    }
    return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) { return canonical_form(a) == canonical_form(b); }

namespace {

// Keeps states reachable from the initial state that can reach an accepting
// state. Throws if the reachable part has a cycle.
Dfa trim(const Dfa& a) {
    const std::size_t n = a.state_count();
    if (n == 0) return a;
    enum : char { white, grey, black };
    std::vector<char> colour(n, white);
    std::vector<char> useful(n, 0);
    std::vector<Dfa::StateId> postorder;
    // Iterative DFS: frames of (state, next transition index).
    std::vector<std::pair<Dfa::StateId, std::size_t>> stack{{a.initial, 0}};
    colour[a.initial] = grey;
    while (!stack.empty()) {
        auto& [s, i] = stack.back();
        if (i < a.transitions[s].size()) {
            Dfa::StateId t = a.transitions[s][i++].second;
            if (colour[t] == grey) throw std::invalid_argument("automaton has a cycle");
            if (colour[t] == white) {
                colour[t] = grey;
                stack.emplace_back(t, 0);
            }
            continue;
        }
        colour[s] = black;
        postorder.push_back(s);
        stack.pop_back();
    }
    for (Dfa::StateId s : postorder) {
        useful[s] = a.accepting[s];
        for (auto [l, t] : a.transitions[s]) useful[s] |= useful[t];
    }
    Dfa out;
    if (!useful[a.initial]) return out;
    std::vector<Dfa::StateId> number(n, Dfa::kNone);
    Dfa::StateId next = 0;
    for (std::size_t s = 0; s < n; ++s)
        if (colour[s] == black && useful[s]) number[s] = next++;
    out.transitions.resize(next);
    out.accepting.resize(next);
    for (std::size_t s = 0; s < n; ++s) {
        if (number[s] == Dfa::kNone) continue;
        out.accepting[number[s]] = a.accepting[s] ? 1 : 0;
        for (auto [l, t] : a.transitions[s])
            if (number[t] != Dfa::kNone) out.transitions[number[s]].emplace_back(l, number[t]);
    }
    out.initial = number[a.initial];
    return out;
}

// Refinable partition over states 0..n-1 (elements of a block are contiguous
// in `elems`; marked elements are moved to the front of their block).
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) elems_[i] = loc_[i] = i;
    }

    std::size_t block_count() const noexcept { return first_.size(); }
    std::size_t block_of(std::size_t e) const noexcept { return block_of_[e]; }
    std::size_t size(std::size_t b) const noexcept { return past_[b] - first_[b]; }
    std::span<const std::size_t> members(std::size_t b) const {
        return {elems_.data() + first_[b], past_[b] - first_[b]};
    }

    // Initial blocks from a key per element.
    void assign(const std::vector<int>& key) {
        std::stable_sort(elems_.begin(), elems_.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i == 0 || key[elems_[i]] != key[elems_[i - 1]]) {
                if (i) past_.push_back(i);
                first_.push_back(i);
                marked_.push_back(i);
            }
            loc_[elems_[i]] = i;
            block_of_[elems_[i]] = first_.size() - 1;
        }
        if (!elems_.empty()) past_.push_back(elems_.size());
    }

    void mark(std::size_t e) {
        std::size_t b = block_of_[e];
        std::size_t i = loc_[e];
        std::size_t j = marked_[b];
        if (i < j) return;  // already marked
        std::swap(elems_[i], elems_[j]);
        loc_[elems_[i]] = i;
        loc_[elems_[j]] = j;
        if (marked_[b]++ == first_[b]) touched_.push_back(b);
    }

    // Splits every touched block into its marked part (new block) and the
    // rest (old id). Calls on_split(old, new) for each real split.
    template <class F>
    void split(F&& on_split) {
        for (std::size_t b : touched_) {
            std::size_t m = marked_[b];
            marked_[b] = first_[b];
            if (m == past_[b]) continue;  // every element marked: no split
            std::size_t nb = first_.size();
            first_.push_back(first_[b]);
            past_.push_back(m);
            marked_.push_back(first_[b]);
            first_[b] = m;
            marked_[b] = m;
            for (std::size_t i = first_[nb]; i < past_[nb]; ++i) block_of_[elems_[i]] = nb;
            on_split(b, nb);
        }
        touched_.clear();
    }

private:
    std::vector<std::size_t> elems_, loc_, block_of_;
    std::vector<std::size_t> first_, past_, marked_;
    std::vector<std::size_t> touched_;
};

}  // namespace

Dfa minimize(const Dfa& input) {
    Dfa a = trim(input);
    const std::size_t n = a.state_count();
    if (n == 0) return a;

    // Incoming transitions per state, sorted by label.
    std::vector<std::vector<std::pair<Label, Dfa::StateId>>> incoming(n);
    for (Dfa::StateId s = 0; s < n; ++s)
        for (auto [l, t] : a.transitions[s]) incoming[t].emplace_back(l, s);
    for (auto& row : incoming) std::sort(row.begin(), row.end());

    Partition p(n);
    std::vector<int> key(n);
    for (std::size_t s = 0; s < n; ++s) key[s] = (a.transitions[s].empty() ? 0 : 2) + (a.accepting[s] ? 1 : 0);
    p.assign(key);

    // Work set of (block, label) splitters.
    std::deque<std::pair<std::size_t, Label>> work;
    std::unordered_set<std::uint64_t> queued;
    std::vector<std::vector<Label>> queued_labels(p.block_count());
    auto code = [](std::size_t b, Label l) { return (static_cast<std::uint64_t>(b) << 32) | l; };
    auto push = [&](std::size_t b, Label l) {
        if (!queued.insert(code(b, l)).second) return;
        work.emplace_back(b, l);
        if (queued_labels.size() <= b) queued_labels.resize(b + 1);
        queued_labels[b].push_back(l);
    };
    auto in_labels = [&](std::size_t b) {
        std::vector<Label> labels;
        for (std::size_t s : p.members(b))
            for (auto [l, src] : incoming[s]) labels.push_back(l);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    };
    // The transition function is partial, so every initial block has to be
    // used as a splitter (dropping one is only sound for complete automata).
    for (std::size_t b = 0; b < p.block_count(); ++b)
        for (Label l : in_labels(b)) push(b, l);

    std::vector<Dfa::StateId> sources;
    while (!work.empty()) {
        auto [splitter, label] = work.front();
        work.pop_front();
        queued.erase(code(splitter, label));

        sources.clear();
        for (std::size_t t : p.members(splitter)) {
            const auto& row = incoming[t];
            auto it = std::lower_bound(row.begin(), row.end(), std::pair<Label, Dfa::StateId>{label, 0});
            for (; it != row.end() && it->first == label; ++it) sources.push_back(it->second);
        }
        for (auto s : sources) p.mark(s);
        p.split([&](std::size_t old_block, std::size_t new_block) {
            if (queued_labels.size() <= new_block) queued_labels.resize(new_block + 1);
            std::vector<Label> pending;
            for (Label l : queued_labels[old_block])
                if (queued.contains(code(old_block, l))) pending.push_back(l);
            queued_labels[old_block] = pending;
            for (Label l : pending) push(new_block, l);
            std::size_t smaller = p.size(new_block) <= p.size(old_block) ? new_block : old_block;
            for (Label l : in_labels(smaller))
                if (!queued.contains(code(old_block, l))) push(smaller, l);
        });
    }

    Dfa out;
    out.transitions.resize(p.block_count());
    out.accepting.resize(p.block_count());
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        std::size_t rep = p.members(b).front();
        out.accepting[b] = a.accepting[rep];
        for (auto [l, t] : a.transitions[rep])
            out.transitions[b].emplace_back(l, static_cast<Dfa::StateId>(p.block_of(t)));
    }
    out.initial = static_cast<Dfa::StateId>(p.block_of(a.initial));
    return canonical_form(out);
}

Dfa nerode_minimal_oracle(const Dfa& a) {
    const std::size_t n = a.state_count();
    if (n == 0) return a;
    using Language = std::vector<std::vector<Label>>;
    std::map<Language, std::size_t> interned;
    std::vector<Language> languages;
    std::vector<std::size_t> lang_of(n, SIZE_MAX);
    std::vector<char> on_stack(n, 0);

    auto lang = [&](auto& self, Dfa::StateId s) -> std::size_t {
        if (lang_of[s] != SIZE_MAX) return lang_of[s];
        if (on_stack[s]) throw std::invalid_argument("automaton has a cycle");
        on_stack[s] = 1;
        Language words;
        if (a.accepting[s]) words.emplace_back();
        for (auto [l, t] : a.transitions[s]) {
            std::size_t id = self(self, t);
            for (const auto& w : languages[id]) {
                std::vector<Label> word{l};
                word.insert(word.end(), w.begin(), w.end());
                words.push_back(std::move(word));
            }
        }
        std::sort(words.begin(), words.end());
        on_stack[s] = 0;
        auto [it, inserted] = interned.try_emplace(words, languages.size());
        if (inserted) languages.push_back(std::move(words));
        return lang_of[s] = it->second;
    };
    std::size_t init = lang(lang, a.initial);
    if (languages[init].empty()) return Dfa{};

    // One state per non-empty right language reachable from the initial state.
    std::map<std::size_t, Dfa::StateId> state_of;
    std::vector<Dfa::StateId> rep;
    Dfa out;
    std::vector<Dfa::StateId> todo{a.initial};
    state_of[init] = 0;
    rep.push_back(a.initial);
    out.transitions.emplace_back();
    for (std::size_t i = 0; i < rep.size(); ++i) {
        Dfa::StateId s = rep[i];
        out.accepting.push_back(a.accepting[s] ? 1 : 0);
        for (auto [l, t] : a.transitions[s]) {
            std::size_t id = lang(lang, t);
            if (languages[id].empty()) continue;
            auto [it, inserted] = state_of.try_emplace(id, static_cast<Dfa::StateId>(rep.size()));
            if (inserted) {
                rep.push_back(t);
                out.transitions.emplace_back();
            }
            out.transitions[i].emplace_back(l, it->second);
        }
    }
    return canonical_form(out);
}

LabeledDag cst_from_msa(const Dfa& msa) {
    LabeledDag dag;
    if (msa.transitions.empty()) return dag;
    // A node is a (state, incoming label) pair; the root has label 0.
    std::map<std::pair<Dfa::StateId, Label>, std::size_t> node_of;
    std::vector<std::pair<Dfa::StateId, Label>> order{{msa.initial, 0}};
    node_of[order[0]] = 0;
    dag.nodes.push_back(DagNode{});
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [state, label] = order[i];
        for (auto [l, t] : msa.transitions[state]) {
            auto [it, inserted] = node_of.try_emplace({t, l}, order.size());
            if (inserted) {
                order.emplace_back(t, l);
                dag.nodes.push_back(DagNode{l, {}, DagNode::kNoOrigin, {}});
            }
            dag.nodes[i].children.push_back(it->second);
        }
    }
    return dag;
}

SimplexTree expand_to_tree(const Dfa& a) {
    std::vector<std::vector<Label>> words;
    if (a.transitions.empty()) return SimplexTree{};
    std::vector<Label> word;
    auto rec = [&](auto& self, Dfa::StateId s) -> void {
        if (a.accepting[s]) words.push_back(word);
        for (auto [l, t] : a.transitions[s]) {
            word.push_back(l);
            self(self, t);
            word.pop_back();
        }
    };
    rec(rec, a.initial);
    return SimplexTree::from_words(words);
}

bool msa_membership(const Dfa& msa, const Simplex& s) { return msa.accepts(s.labels()); }

Dfa msa_insert(const Dfa& msa, const Simplex& s) {
    SimplexTree t = expand_to_tree(msa);
    t.insert_full(s);
    return minimize(sa_from_st(t));
}

Dfa msa_remove(const Dfa& msa, const Simplex& s) {
    if (!msa_membership(msa, s) || s.empty()) return msa;
    SimplexTree t = expand_to_tree(msa);
    t.remove_face(s);
    return minimize(sa_from_st(t));
}

Dfa mxsa_minimize(const ComplexSpec& spec) {
    LabelTrie trie;
    for (const auto& m : spec.maximal) trie.add_path(m.labels());
    Dfa a;
    a.transitions.emplace_back();
    a.accepting.push_back(0);
    auto rec = [&](auto& self, LabelTrie::NodeId node, Dfa::StateId state) -> void {
        for (auto [l, c] : trie.children(node)) {
            auto child = static_cast<Dfa::StateId>(a.transitions.size());
            a.transitions.emplace_back();
            a.accepting.push_back(trie.is_leaf(c) ? 1 : 0);
            a.transitions[state].emplace_back(l, child);
            self(self, c, child);
        }
    };
    rec(rec, LabelTrie::kRoot, 0);
    return minimize(a);
}

}  // namespace simplicia
