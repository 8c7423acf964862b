#include "simplicia/sal.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplicia {

SimplexKey KeyAllocator::acquire() {
    if (!free_.empty()) {
        SimplexKey k = *free_.begin();
        free_.erase(free_.begin());
        return k;
    }
    return next_++;
}

void KeyAllocator::release(SimplexKey key) {
    if (key + 1 == next_) {
        --next_;
        // Shrink past trailing free keys so fresh keys stay small.
        while (!free_.empty() && *free_.rbegin() + 1 == next_) {
            free_.erase(std::prev(free_.end()));
            --next_;
        }
        return;
    }
    free_.insert(key);
}

SimplexArrayList::SimplexArrayList(const ComplexSpec& spec, int level) : level_(level) {
    if (level < 0 || level > 2) throw std::invalid_argument("array list level must be 0, 1 or 2");
    std::vector<Simplex> order = spec.maximal;
    std::stable_sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    for (const auto& s : order) add_component(s);
}

std::size_t SimplexArrayList::component_nodes(int level, std::size_t j) {
    switch (level) {
        case 0: return j + 1;
        case 1: return j * (j + 1) / 2 + 1;
        default: return j == 0 ? 1 : (j + 1) * j * (j - 1) / 6 + j + 1;
    }
}

std::size_t SimplexArrayList::component_edges(int level, std::size_t j) {
    // Count successors position by position (positions 0..j, j = last).
    std::size_t edges = 0;
    if (level == 0) return j;
    if (level == 1) {
        for (std::size_t i = 0; i < j; ++i)
            for (std::size_t i2 = i + 1; i2 <= j; ++i2) edges += i2 < j ? j - i2 : 1;
        return edges;
    }
    for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t i2 = i + 1; i2 <= j; ++i2) {
            if (i2 == j) {
                edges += 1;  // (i, (j, phi)) -> (j, (phi, phi))
                continue;
            }
            for (std::size_t i3 = i2 + 1; i3 <= j; ++i3) edges += i3 < j ? j - i3 : 1;
        }
    }
    return edges;
}

const std::vector<SalEntry>& SimplexArrayList::array(Label v) const {
    static const std::vector<SalEntry> empty;
    return v < arrays_.size() ? arrays_[v] : empty;
}

std::vector<SalEntry> SimplexArrayList::entries_for(const Simplex& s, SimplexKey key, std::size_t p) const {
    std::vector<SalEntry> out;
    const std::size_t j = s.size() - 1;
    if (level_ == 0) {
        out.push_back(SalEntry{{kPhi, kPhi}, key});
    } else if (level_ == 1) {
        for (std::size_t p2 = p + 1; p2 <= j; ++p2) out.push_back(SalEntry{{s[p2], kPhi}, key});
        if (p == j) out.push_back(SalEntry{{kPhi, kPhi}, key});
    } else {
        for (std::size_t p2 = p + 1; p2 < j; ++p2)
            for (std::size_t p3 = p2 + 1; p3 <= j; ++p3) out.push_back(SalEntry{{s[p2], s[p3]}, key});
        if (p < j) out.push_back(SalEntry{{s[j], kPhi}, key});
        if (p == j) out.push_back(SalEntry{{kPhi, kPhi}, key});
    }
    return out;
}

void SimplexArrayList::add_component(const Simplex& s) {
    SimplexKey key = keys_.acquire();
    simplex_of_.emplace(key, s);
    if (arrays_.size() <= s.last()) arrays_.resize(s.last() + 1);
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto& arr = arrays_[s[p]];
        for (const auto& e : entries_for(s, key, p)) arr.insert(std::lower_bound(arr.begin(), arr.end(), e), e);
    }
    nodes_ += component_nodes(level_, s.size() - 1);
    edges_ += component_edges(level_, s.size() - 1);
}

void SimplexArrayList::erase_component(SimplexKey key) {
    auto it = simplex_of_.find(key);
    const Simplex s = it->second;
    simplex_of_.erase(it);
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto& arr = arrays_[s[p]];
        for (const auto& e : entries_for(s, key, p)) {
            auto pos = std::lower_bound(arr.begin(), arr.end(), e);
            if (pos != arr.end() && *pos == e) arr.erase(pos);
        }
    }
    nodes_ -= component_nodes(level_, s.size() - 1);
    edges_ -= component_edges(level_, s.size() - 1);
    keys_.release(key);
}

std::pair<std::size_t, std::size_t> SimplexArrayList::range(Label v, Label a, Label b, bool match_b) const {
    const auto& arr = array(v);
    auto proj = [match_b](const SalEntry& e) { return std::pair{e.next[0], match_b ? e.next[1] : Label{0}}; };
    auto found = std::ranges::equal_range(arr, std::pair{a, match_b ? b : Label{0}}, {}, proj);
    return {static_cast<std::size_t>(found.begin() - arr.begin()), static_cast<std::size_t>(found.end() - arr.begin())};
}

SalMembership SimplexArrayList::membership(const Simplex& q) const {
    SalMembership r;
    if (q.empty()) {
        r.member = true;
        for (const auto& [k, s] : simplex_of_) r.keys.push_back(k);
        return r;
    }
    auto all_keys = [&](Label v) {
        std::vector<SimplexKey> keys;
        for (const auto& e : array(v)) keys.push_back(e.key);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return keys;
    };

    struct Range {
        Label v;
        std::size_t lo, hi;
    };
    std::vector<Range> ranges;
    if (level_ == 0) {
        for (Label v : q) ranges.push_back({v, 0, array(v).size()});
    } else if (q.size() == 1) {
        r.keys = all_keys(q[0]);
    } else if (level_ == 1) {
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            auto [lo, hi] = range(q[i], q[i + 1], kPhi, true);
            ranges.push_back({q[i], lo, hi});
        }
    } else if (q.size() == 2) {
        auto [lo, hi] = range(q[0], q[1], 0, false);
        for (std::size_t i = lo; i < hi; ++i) r.keys.push_back(array(q[0])[i].key);
        std::sort(r.keys.begin(), r.keys.end());
        r.keys.erase(std::unique(r.keys.begin(), r.keys.end()), r.keys.end());
    } else {
        for (std::size_t i = 0; i + 2 < q.size(); ++i) {
            auto [lo, hi] = range(q[i], q[i + 1], q[i + 2], true);
            ranges.push_back({q[i], lo, hi});
        }
    }

    if (!ranges.empty()) {
        // Every range is sorted by key; walk the shortest, search the rest.
        auto smallest = std::min_element(ranges.begin(), ranges.end(),
                                         [](const Range& a, const Range& b) { return a.hi - a.lo < b.hi - b.lo; });
        const auto& base = array(smallest->v);
        for (std::size_t i = smallest->lo; i < smallest->hi; ++i) {
            SimplexKey key = base[i].key;
            bool everywhere = std::all_of(ranges.begin(), ranges.end(), [&](const Range& rg) {
                const auto& arr = array(rg.v);
                auto first = arr.begin() + static_cast<std::ptrdiff_t>(rg.lo);
                auto last = arr.begin() + static_cast<std::ptrdiff_t>(rg.hi);
                return std::ranges::binary_search(first, last, key, {}, &SalEntry::key);
            });
            if (everywhere) r.keys.push_back(key);
        }
    }
    r.member = !r.keys.empty();
    return r;
}

OpStatus SimplexArrayList::insert_maximal(const Simplex& q) {
    if (q.empty() || contains(q)) return OpStatus::absorbed;
    std::set<SimplexKey> inside;
    for (Label v : q)
        for (const auto& e : array(v))
            if (!inside.contains(e.key) && q.is_superset_of(simplex_of_.at(e.key))) inside.insert(e.key);
    for (SimplexKey k : inside) erase_component(k);
    add_component(q);
    return OpStatus::applied;
}

OpStatus SimplexArrayList::remove_face(const Simplex& q) {
    if (q.empty()) return OpStatus::not_a_face;
    auto m = membership(q);
    if (!m.member) return OpStatus::not_a_face;
    std::vector<Simplex> removed;
    for (SimplexKey k : m.keys) {
        removed.push_back(simplex_of_.at(k));
        erase_component(k);
    }
    std::vector<Simplex> facets;
    for (const auto& g : removed)
        for (Label v : q) facets.push_back(g.without(v));
    std::stable_sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    for (const auto& f : facets) insert_maximal(f);
    return OpStatus::applied;
}

OpStatus SimplexArrayList::elementary_collapse(const Simplex& tau, const Simplex& sigma) {
    if (sigma.empty() || tau.size() != sigma.size() + 1 || !tau.is_superset_of(sigma)) return OpStatus::not_free;
    auto m = membership(sigma);
    if (m.keys.size() != 1 || simplex_of_.at(m.keys.front()) != tau) return OpStatus::not_free;
    erase_component(m.keys.front());
    for (Label v : sigma) insert_maximal(tau.without(v));
    return OpStatus::applied;
}

void SimplexArrayList::edge_contract(Label u, Label v) {
    if (u == v) return;
    auto m = membership(Simplex{u});
    std::vector<Simplex> moved;
    for (SimplexKey k : m.keys) {
        std::vector<Label> w(simplex_of_.at(k).begin(), simplex_of_.at(k).end());
        std::replace(w.begin(), w.end(), u, v);
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        moved.push_back(Simplex::from_sorted(std::move(w)));
        erase_component(k);
    }
    std::stable_sort(moved.begin(), moved.end(), [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    for (const auto& s : moved) insert_maximal(s);
}

ComplexSpec SimplexArrayList::to_spec() const {
    std::vector<Simplex> list;
    for (const auto& [k, s] : simplex_of_) list.push_back(s);
    return complex_from_maximal(std::move(list));
}

LabeledDag SimplexArrayList::materialize() const {
    LabeledDag dag;
    dag.nodes.emplace_back();
    std::map<std::pair<Label, SalEntry>, std::size_t> id_of;
    auto tag_of = [&](const SalEntry& e) {
        std::vector<Label> tag;
        for (int i = 0; i < level_; ++i) tag.push_back(e.next[i]);
        return tag;
    };
    for (Label v = 0; v < arrays_.size(); ++v)
        for (const auto& e : arrays_[v]) {
            id_of.emplace(std::pair{v, e}, dag.nodes.size());
            dag.nodes.push_back(DagNode{v, tag_of(e), e.key, {}});
        }
    auto entries_with_key = [&](Label v, SimplexKey key, auto&& keep) {
        std::vector<std::size_t> out;
        for (const auto& e : array(v))
            if (e.key == key && keep(e)) out.push_back(id_of.at({v, e}));
        return out;
    };
    auto any = [](const SalEntry&) { return true; };
    for (const auto& [key, s] : simplex_of_) {
        for (std::size_t id : entries_with_key(s[0], key, any)) dag.nodes[dag.root].children.push_back(id);
        for (std::size_t p = 0; p < s.size(); ++p) {
            for (const auto& e : entries_for(s, key, p)) {
                std::size_t from = id_of.at({s[p], e});
                std::vector<std::size_t> to;
                if (level_ == 0) {
                    if (p + 1 < s.size()) to = entries_with_key(s[p + 1], key, any);
                } else if (e.next[0] != kPhi) {
                    if (level_ == 1)
                        to = entries_with_key(e.next[0], key, any);
                    else
                        to = entries_with_key(e.next[0], key, [&](const SalEntry& f) { return f.next[0] == e.next[1]; });
                }
                dag.nodes[from].children = std::move(to);
            }
        }
    }
    return dag;
}

LabeledDag transitive_closure(const LabeledDag& dag) {
    LabeledDag out = dag;
    std::vector<std::vector<char>> reach(dag.nodes.size());
    auto fill = [&](auto& self, std::size_t id) -> const std::vector<char>& {
        auto& r = reach[id];
        if (!r.empty()) return r;
        r.assign(dag.nodes.size(), 0);
        for (std::size_t c : dag.nodes[id].children) {
            const auto& rc = self(self, c);
            r[c] = 1;
            for (std::size_t i = 0; i < rc.size(); ++i) r[i] |= rc[i];
        }
        return r;
    };
    for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
        if (id == dag.root) continue;
        const auto& r = fill(fill, id);
        auto& kids = out.nodes[id].children;
        for (std::size_t t = 0; t < r.size(); ++t)
            if (r[t] && std::find(kids.begin(), kids.end(), t) == kids.end()) kids.push_back(t);
    }
    return out;
}

LabeledDag expand_representation(const LabeledDag& dag) {
    LabeledDag out;
    out.nodes.emplace_back();
    out.nodes[0].label = dag.nodes[dag.root].label;
    std::vector<std::vector<std::size_t>> copies(dag.nodes.size());
    std::vector<std::vector<std::size_t>> target(dag.nodes.size());  // original child behind each copy
    for (std::size_t x = 0; x < dag.nodes.size(); ++x) {
        if (x == dag.root) continue;
        const auto& node = dag.nodes[x];
        if (node.children.empty()) {
            copies[x].push_back(out.nodes.size());
            target[x].push_back(SIZE_MAX);
            out.nodes.push_back(DagNode{node.label, std::vector<Label>(node.tag.size() + 1, kPhi), node.origin, {}});
            continue;
        }
        for (std::size_t c : node.children) {
            std::vector<Label> tag{dag.nodes[c].label};
            tag.insert(tag.end(), dag.nodes[c].tag.begin(), dag.nodes[c].tag.end());
            copies[x].push_back(out.nodes.size());
            target[x].push_back(c);
            out.nodes.push_back(DagNode{node.label, std::move(tag), node.origin, {}});
        }
    }
    for (std::size_t c : dag.nodes[dag.root].children)
        for (std::size_t id : copies[c]) out.nodes[0].children.push_back(id);
    for (std::size_t x = 0; x < dag.nodes.size(); ++x)
        for (std::size_t i = 0; i < copies[x].size(); ++i)
            if (target[x][i] != SIZE_MAX)
                for (std::size_t id : copies[target[x][i]]) out.nodes[copies[x][i]].children.push_back(id);
    return out;
}

LabeledDag sal_via_transforms(const MaximalSimplexTree& t, int level) {
    LabeledDag dag = unprefix(t);
    if (level == 0) return dag;
    dag = transitive_closure(dag);
    for (int i = 0; i < level; ++i) dag = expand_representation(dag);
    return dag;
}

SalGraph canonical_graph(const LabeledDag& dag, const std::vector<Simplex>& origins) {
    SalGraph g;
    auto node_of = [&](std::size_t id) {
        const auto& n = dag.nodes[id];
        return SalGraph::Node{origins.at(n.origin), n.label, n.tag};
    };
    for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
        if (id == dag.root) continue;
        g.nodes.insert(node_of(id));
        for (std::size_t c : dag.nodes[id].children) g.edges.emplace(node_of(id), node_of(c));
    }
    return g;
}

SalGraph canonical_graph(const SimplexArrayList& sal) {
    std::vector<Simplex> origins;
    for (const auto& [key, s] : sal.components()) {
        if (origins.size() <= key) origins.resize(key + 1);
        origins[key] = s;
    }
    return canonical_graph(sal.materialize(), origins);
}

std::vector<std::size_t> gamma_profile(const ComplexSpec& spec, int j_max) {
    std::vector<std::size_t> gamma;
    int top = std::min(j_max, spec.dimension());
    for (int j = 0; j <= top; ++j) {
        std::map<std::vector<Label>, std::size_t> count;
        std::size_t best = 0;
        for (const auto& s : spec.maximal) {
            if (s.size() < static_cast<std::size_t>(j + 1)) continue;
            // Enumerate (j+1)-subsets by index combination.
            std::vector<std::size_t> idx(j + 1);
            for (int i = 0; i <= j; ++i) idx[i] = i;
            std::vector<Label> face(j + 1);
            while (true) {
                for (int i = 0; i <= j; ++i) face[i] = s[idx[i]];
                best = std::max(best, ++count[face]);
                int i = j;
                while (i >= 0 && idx[i] == s.size() - static_cast<std::size_t>(j + 1 - i)) --i;
                if (i < 0) break;
                ++idx[i];
                for (int t = i + 1; t <= j; ++t) idx[t] = idx[t - 1] + 1;
            }
        }
        gamma.push_back(best);
    }
    return gamma;
}

}  // namespace simplicia
