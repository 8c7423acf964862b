#include "simplicia/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "simplicia/compression.hpp"
#include "simplicia/mxst.hpp"

namespace simplicia {

Labeling Labeling::identity(Label n) {
    Labeling l;
    l.image.resize(n + 1);
    std::iota(l.image.begin(), l.image.end(), Label{0});
    return l;
}

bool Labeling::is_bijection() const {
    if (image.empty()) return true;
    std::vector<char> seen(image.size(), 0);
    for (std::size_t v = 1; v < image.size(); ++v) {
        Label t = image[v];
        if (t == 0 || t >= image.size() || seen[t]) return false;
        seen[t] = 1;
    }
    return true;
}

Labeling Labeling::after(const Labeling& first) const {
    Labeling out;
    out.image.resize(first.image.size());
    for (std::size_t v = 1; v < first.image.size(); ++v) out.image[v] = (*this)(first(v));
    return out;
}

ComplexSpec relabel(const ComplexSpec& spec, const Labeling& l) {
    if (l.n() < spec.n) throw std::invalid_argument("labeling does not cover every vertex");
    std::vector<Simplex> list;
    list.reserve(spec.maximal.size());
    for (const auto& s : spec.maximal) {
        std::vector<Label> w;
        for (Label v : s) w.push_back(l(v));
        std::sort(w.begin(), w.end());
        list.push_back(Simplex::from_sorted(std::move(w)));
    }
    return complex_from_maximal(std::move(list), spec.n);
}

std::vector<std::size_t> vertex_degrees(const ComplexSpec& spec) {
    std::vector<std::size_t> deg(spec.n + 1, 0);
    for (const auto& s : spec.maximal)
        for (Label v : s) ++deg[v];
    return deg;
}

Labeling heuristic_labeling(const ComplexSpec& spec) {
    auto deg = vertex_degrees(spec);
    std::vector<Label> order(spec.n);
    std::iota(order.begin(), order.end(), Label{1});
    std::stable_sort(order.begin(), order.end(), [&](Label a, Label b) { return deg[a] > deg[b]; });
    Labeling l;
    l.image.assign(spec.n + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) l.image[order[i]] = static_cast<Label>(i + 1);
    return l;
}

const char* to_string(LabelingObjective o) {
    switch (o) {
        case LabelingObjective::MXST_EDGES: return "mxst-edges";
        case LabelingObjective::CMXST_EDGES: return "cmxst-edges";
        case LabelingObjective::CST_EDGES: return "cst-edges";
        case LabelingObjective::MSA_STATES: return "msa-states";
    }
    return "?";
}

std::uint64_t objective_size(const ComplexSpec& spec, LabelingObjective o) {
    switch (o) {
        case LabelingObjective::MXST_EDGES: return MaximalSimplexTree(spec).edge_count();
        case LabelingObjective::CMXST_EDGES: return MaximalSimplexTree(spec).compressed_edge_count();
        case LabelingObjective::CST_EDGES: return count_face_structures(spec).cst_edges;
        case LabelingObjective::MSA_STATES: return count_face_structures(spec).msa_states;
    }
    return 0;
}

unsigned worker_count() {
    if (const char* env = std::getenv("SIMPLICIA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

LabelingSearch exhaustive_optimal(const ComplexSpec& spec, LabelingObjective o, unsigned threads) {
    const Label n = spec.n;
    if (n > 9) throw std::invalid_argument("exhaustive labeling search is limited to n <= 9");
    if (n == 0) return LabelingSearch{Labeling::identity(0), objective_size(spec, o), objective_size(spec, o)};
    if (threads == 0) threads = worker_count();

    // Block b holds the permutations whose image of vertex 1 is b + 1.
    std::vector<LabelingSearch> blocks(n);
    auto run_block = [&](Label b) {
        std::vector<Label> rest;
        for (Label v = 1; v <= n; ++v)
            if (v != b + 1) rest.push_back(v);
        LabelingSearch& out = blocks[b];
        bool first = true;
        do {
            Labeling l;
            l.image.assign(1, 0);
            l.image.push_back(b + 1);
            l.image.insert(l.image.end(), rest.begin(), rest.end());
            std::uint64_t size = objective_size(relabel(spec, l), o);
            if (first || size < out.best_size) {
                out.best = l;
                out.best_size = size;
            }
            if (first || size > out.worst_size) out.worst_size = size;
            first = false;
        } while (std::next_permutation(rest.begin(), rest.end()));
    };

    std::atomic<Label> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(threads, n); ++t)
        pool.emplace_back([&] {
            for (Label b = next++; b < n; b = next++) run_block(b);
        });
    for (auto& th : pool) th.join();

    LabelingSearch result = blocks[0];
    for (Label b = 1; b < n; ++b) {
        if (blocks[b].best_size < result.best_size) {
            result.best = blocks[b].best;
            result.best_size = blocks[b].best_size;
        }
        result.worst_size = std::max(result.worst_size, blocks[b].worst_size);
    }
    return result;
}

}  // namespace simplicia
