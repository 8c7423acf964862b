#pragma once

#include <cstdint>
#include <vector>

#include "simplicia/types.hpp"

namespace simplicia {

/// Permutation of 1..n; `image[v]` is the new label of vertex v (index 0 unused).
struct Labeling {
    std::vector<Label> image;

    static Labeling identity(Label n);
    Label n() const noexcept { return image.empty() ? 0 : static_cast<Label>(image.size() - 1); }
    Label operator()(Label v) const { return image.at(v); }
    bool is_bijection() const;
    /// (*this) after `first`: v -> this(first(v)).
    Labeling after(const Labeling& first) const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

ComplexSpec relabel(const ComplexSpec& spec, const Labeling& l);

/// Number of maximal simplices containing each vertex (index 0 unused).
std::vector<std::size_t> vertex_degrees(const ComplexSpec& spec);

/// Vertices ranked by decreasing k_v, ties by increasing label; the vertex
/// ranked i-th receives label i.
Labeling heuristic_labeling(const ComplexSpec& spec);

enum class LabelingObjective { MXST_EDGES, CMXST_EDGES, CST_EDGES, MSA_STATES };

const char* to_string(LabelingObjective o);
std::uint64_t objective_size(const ComplexSpec& spec, LabelingObjective o);

struct LabelingSearch {
    Labeling best;
    std::uint64_t best_size = 0;
    std::uint64_t worst_size = 0;
};

/// Tries every permutation of 1..n (n <= 9) and returns the first one, in
/// lexicographic order of the image vector, reaching the minimum. Blocks of
/// permutations sharing their first image run on separate threads.
LabelingSearch exhaustive_optimal(const ComplexSpec& spec, LabelingObjective o, unsigned threads = 0);

/// Worker count: SIMPLICIA_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace simplicia
