#include "simplicia/compression.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "simplicia/mxst.hpp"

namespace simplicia {

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return Ratio{0, 0};
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) return Ratio{0, 1};
    return Ratio{num / g, den / g};
}

double Ratio::value() const noexcept { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

std::string Ratio::format(int precision) const {
    if (den == 0) return precision > 0 ? "0." + std::string(precision, '0') : "0";
    unsigned __int128 scale = 1;
    for (int i = 0; i < precision; ++i) scale *= 10;
    unsigned __int128 scaled = (static_cast<unsigned __int128>(num) * scale * 2 + den) / (2 * static_cast<unsigned __int128>(den));
    auto whole = static_cast<std::uint64_t>(scaled / scale);
    auto frac = static_cast<std::uint64_t>(scaled % scale);
    std::string out = std::to_string(whole);
    if (precision > 0) {
        std::string f = std::to_string(frac);
        out += '.' + std::string(precision - f.size(), '0') + f;
    }
    return out;
}

namespace {

// A family is the antichain of label sets still reachable below a tree node:
// the subtree of the node holding face s is the trie of all subsets of the
// members of its family. Two nodes share a right language exactly when their
// families are equal.
using Family = std::vector<std::vector<Label>>;

struct FamilyHash {
    std::size_t operator()(const Family& f) const noexcept {
        std::size_t h = f.size();
        for (const auto& s : f) {
            h = h * 1000003u ^ s.size();
            for (Label l : s) h = (h ^ l) * 0x100000001b3ull;
        }
        return h;
    }
};

bool subset_of(const std::vector<Label>& a, const std::vector<Label>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Family maximal_members(Family sets) {
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    Family kept;
    for (auto& s : sets) {
        bool inside = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return subset_of(s, k); });
        if (!inside) kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

class FamilyCounter {
public:
    struct Info {
        std::uint64_t words = 0;  // nodes of the subtree, its own node included
        std::vector<std::pair<Label, std::size_t>> children;
    };

    std::size_t visit(const Family& f) {
        if (auto it = ids_.find(f); it != ids_.end()) return it->second;
        std::vector<Label> labels;
        for (const auto& s : f) labels.insert(labels.end(), s.begin(), s.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        Info info;
        info.words = 1;
        for (Label v : labels) {
            Family sub;
            for (const auto& s : f) {
                auto pos = std::lower_bound(s.begin(), s.end(), v);
                if (pos != s.end() && *pos == v) sub.emplace_back(pos + 1, s.end());
            }
            std::size_t child = visit(maximal_members(std::move(sub)));
            info.words += infos_[child].words;
            info.children.emplace_back(v, child);
        }
        std::size_t id = infos_.size();
        infos_.push_back(std::move(info));
        ids_.emplace(f, id);
        return id;
    }

    const Info& info(std::size_t id) const { return infos_[id]; }
    std::size_t size() const noexcept { return infos_.size(); }

private:
    std::unordered_map<Family, std::size_t, FamilyHash> ids_;
    std::vector<Info> infos_;
};

}  // namespace

FaceStructureCounts count_face_structures(const ComplexSpec& spec) {
    FaceStructureCounts c;
    Family root;
    for (const auto& m : spec.maximal) root.push_back(m.word());
    if (root.empty()) {
        c.msa_states = 1;
        c.cst_nodes = 1;
        return c;
    }
    FamilyCounter counter;
    std::size_t top = counter.visit(maximal_members(std::move(root)));
    c.st_edges = counter.info(top).words - 1;

    // Only families reachable from the root were interned, so every one of
    // them is a state of the minimal automaton.
    c.msa_states = counter.size();
    for (std::size_t id = 0; id < counter.size(); ++id) c.msa_transitions += counter.info(id).children.size();

    std::set<std::pair<Label, std::size_t>> nodes;
    for (std::size_t id = 0; id < counter.size(); ++id)
        for (const auto& child : counter.info(id).children) nodes.insert(child);
    c.cst_nodes = nodes.size() + 1;
    c.cst_edges = counter.info(top).children.size();
    for (const auto& [label, id] : nodes) c.cst_edges += counter.info(id).children.size();
    return c;
}

CompressionReport compression_report(const ComplexSpec& spec) {
    CompressionReport r;
    auto counts = count_face_structures(spec);
    MaximalSimplexTree mx(spec);
    r.st = counts.st_edges;
    r.cst = counts.cst_edges;
    r.msa_states = counts.msa_states;
    r.mxst = mx.edge_count();
    r.cmxst = mx.compressed_edge_count();
    r.rho_st = Ratio::of(r.st, r.cst);
    r.rho_mxst = Ratio::of(r.mxst, r.cmxst);
    return r;
}

}  // namespace simplicia
