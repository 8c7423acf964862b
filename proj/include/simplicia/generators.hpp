#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "simplicia/types.hpp"

namespace simplicia {

struct PointCloud {
    std::size_t dim = 0;
    std::vector<std::vector<double>> points;
};

/// Undirected simple graph on vertices 1..n; edges stored as (a, b) with a < b.
struct Graph {
    Label n = 0;
    std::vector<std::pair<Label, Label>> edges;
};

/// Portable random source: std::mt19937_64 (fully specified by the standard)
/// with doubles built from the top 53 bits, so runs repeat across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Maximal cliques of the graph (Bron-Kerbosch with pivoting), as a complex.
ComplexSpec flag_complex(const Graph& g);

/// r-neighbourhood graph under the Euclidean metric (d(p, q) <= r).
Graph neighbourhood_graph(const PointCloud& pc, double r);
ComplexSpec rips_complex(const PointCloud& pc, double r);

/// G(n, p): each pair i < j is kept independently with probability p,
/// pairs drawn in lexicographic order.
Graph random_graph(Label n, double p, std::uint64_t seed);

/// Points of the lifted figure-8 Klein bottle in R^5, parameters uniform on
/// [0, 2pi)^2.
PointCloud klein_bottle_sample(std::size_t count, std::uint64_t seed);
/// Residuals of the implicit equations satisfied by the embedding.
std::pair<double, double> klein_bottle_residuals(const std::vector<double>& x);

/// Fixed complexes used throughout the tests.
/// Tetrahedra 1345, 2345 and triangle 136.
ComplexSpec basic_complex();
/// 12367, 235, 467, 45: not pure.
ComplexSpec nonpure_complex();
/// On 2n vertices: every (n/2)-subset S of [n] together with x + n, for
/// each x in S. n must be even.
ComplexSpec subset_copies(Label n);
/// Tetrahedron 1246 and triangles 245, 345, 147.
ComplexSpec tetra_triangles();
/// ({1..k+1} minus {i}) plus {k+1+i}, for i = 1..k.
ComplexSpec exponential_gap(Label k);
/// {1..d, d+i} for i = 1..k.
ComplexSpec prefix_fan(Label d, Label k);
/// Four families on N = kd/4 + k/2 + d + 1 vertices whose contraction of N
/// into 1 adds many MxST nodes. k must be a multiple of 4.
ComplexSpec contraction_heavy(Label d, Label k);
/// Triangle and tetrahedron sharing an edge: 123 + 1245, or 134 + 2345.
ComplexSpec triangle_tetrahedron(bool alternate);

/// Dispatches by name: basic, nonpure, subset-copies (n), tetra-triangles,
/// exp-gap (k), prefix-fan (d, k), contract-heavy (d, k), tritet,
/// tritet-alt. Throws std::invalid_argument.
ComplexSpec named_example(const std::string& name, Label n, Label k, Label d);

/// Random complex on at most n vertices with up to `max_k` maximal simplices.
ComplexSpec random_complex(Rng& rng, Label n, std::size_t max_k, std::size_t max_size);

}  // namespace simplicia
