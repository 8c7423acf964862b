#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "simplicia/generators.hpp"
#include "simplicia/labeled_dag.hpp"
#include "simplicia/mxst.hpp"
#include "simplicia/oracle.hpp"
#include "simplicia/simplex_tree.hpp"
#include "support.hpp"

using namespace simplicia;
using testing::spec_of;

TEST_SUITE("generators") {

TEST_CASE("rng is reproducible") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng r(1);
    for (int i = 0; i < 1000; ++i) {
        double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(r.below(7) < 7);
    }
    // std::mt19937_64 with the default seed has a fixed 10000th output.
    std::mt19937_64 reference;
    reference.discard(9999);
    CHECK(reference() == 9981545732273789042ull);
}

TEST_CASE("rips complexes") {
    PointCloud line{1, {{0.0}, {1.0}, {2.0}}};
    CHECK(rips_complex(line, 1.0).maximal == std::vector<Simplex>{{1, 2}, {2, 3}});
    CHECK(rips_complex(line, 0.0).k() == 3);

    double h = std::sqrt(3.0) / 2;
    PointCloud tri{2, {{0.0, 0.0}, {1.0, 0.0}, {0.5, h}}};
    CHECK(rips_complex(tri, 1.0 + 1e-9).maximal == std::vector<Simplex>{{1, 2, 3}});
}

TEST_CASE("flag complexes") {
    Graph cycle{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}};
    CHECK(flag_complex(cycle).maximal == std::vector<Simplex>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    Graph k5{5, {}};
    for (Label a = 1; a <= 5; ++a)
        for (Label b = a + 1; b <= 5; ++b) k5.edges.push_back({a, b});
    CHECK(flag_complex(k5).maximal == std::vector<Simplex>{{1, 2, 3, 4, 5}});

    Graph lonely{3, {{1, 2}}};
    CHECK(flag_complex(lonely).maximal == std::vector<Simplex>{{1, 2}, {3}});
}

TEST_CASE("flag complex maximal cliques against brute force") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(9, 0.5, seed);
        std::set<std::pair<Label, Label>> e(g.edges.begin(), g.edges.end());
        std::set<Simplex> cliques;
        for (const auto& s : testing::all_candidates(9)) {
            bool ok = true;
            for (std::size_t i = 0; i < s.size() && ok; ++i)
                for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = e.count({s[i], s[j]}) > 0;
            if (ok) cliques.insert(s);
        }
        CHECK(flag_complex(g) == oracle_maximal_of(cliques, 9));
    }
}

TEST_CASE("random graphs") {
    CHECK(random_graph(10, 0.0, 1).edges.empty());
    CHECK(random_graph(10, 1.0, 1).edges.size() == 45);
    auto g = random_graph(25, 0.8, 7);
    double sigma = std::sqrt(300 * 0.8 * 0.2);
    CHECK(std::abs(static_cast<double>(g.edges.size()) - 240.0) <= 4 * sigma);
    CHECK(random_graph(25, 0.8, 7).edges == g.edges);
    for (auto [a, b] : g.edges) CHECK(a < b);

    auto k = flag_complex(g).k();
    CHECK(k >= 20);
    CHECK(k <= 1000);
}

TEST_CASE("klein bottle sample") {
    CHECK(klein_bottle_sample(0, 1).points.empty());
    auto pc = klein_bottle_sample(200, 3);
    CHECK(pc.dim == 5);
    CHECK(pc.points.size() == 200);
    for (const auto& p : pc.points) {
        auto [r1, r2] = klein_bottle_residuals(p);
        CHECK(std::abs(r1) < 1e-9);
        CHECK(std::abs(r2) < 1e-9);
    }
    CHECK(klein_bottle_sample(200, 3).points == pc.points);
}

TEST_CASE("klein bottle distances do not depend on the seed") {
    auto distances = [](std::uint64_t seed) {
        auto pc = klein_bottle_sample(1000, seed);
        std::vector<double> d;
        for (std::size_t i = 0; i < pc.points.size(); ++i)
            for (std::size_t j = i + 1; j < pc.points.size(); ++j) {
                double s = 0;
                for (std::size_t c = 0; c < pc.dim; ++c) s += (pc.points[i][c] - pc.points[j][c]) * (pc.points[i][c] - pc.points[j][c]);
                d.push_back(std::sqrt(s));
            }
        std::sort(d.begin(), d.end());
        return d;
    };
    auto a = distances(1), b = distances(2);
    // two-sample Kolmogorov-Smirnov statistic
    double ks = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        ks = std::max(ks, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    CHECK(ks < 0.1);
}

TEST_CASE("rips faces grow with r") {
    auto pc = klein_bottle_sample(60, 8);
    auto small = oracle_faces(rips_complex(pc, 0.5)).faces;
    auto large = oracle_faces(rips_complex(pc, 0.8)).faces;
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST_CASE("rips sweep grows") {
    auto pc = klein_bottle_sample(120, 5);
    std::uint64_t last_m = 0;
    int last_d = -1;
    for (double r : {0.3, 0.6, 0.9}) {
        auto spec = rips_complex(pc, r);
        auto p = profile(spec);
        CHECK(p.m >= last_m);
        CHECK(p.d >= last_d);
        last_m = p.m;
        last_d = p.d;
    }
}

TEST_CASE("named complexes") {
    CHECK(exponential_gap(3).maximal == spec_of({{2, 3, 4, 5}, {1, 3, 4, 6}, {1, 2, 4, 7}}).maximal);
    auto np = nonpure_complex();
    CHECK(np.k() == 4);
    CHECK_FALSE(np.is_pure());
    CHECK(prefix_fan(3, 3).maximal == spec_of({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}}).maximal);
    CHECK(tetra_triangles().k() == 4);

    auto sc = subset_copies(4);
    CHECK(sc.n == 8);
    // 6 subsets of size 2, each with 2 copies
    CHECK(sc.k() == 12);
    CHECK_THROWS_AS(subset_copies(3), std::invalid_argument);

    CHECK(named_example("basic", 0, 0, 0) == basic_complex());
    CHECK(named_example("prefix-fan", 0, 3, 3) == prefix_fan(3, 3));
    CHECK_THROWS_AS(named_example("nope", 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(contraction_heavy(3, 6), std::invalid_argument);
}

TEST_CASE("tetrahedron with triangles compresses only the maximal tree") {
    auto spec = tetra_triangles();
    MaximalSimplexTree mx(spec);
    CHECK(mx.compressed_edge_count() < mx.edge_count());
    SimplexTree st(spec);
    CHECK(merge_identical_subtrees(dag_from_trie(st.trie())).edge_count() == st.edge_count());
}

TEST_CASE("random complexes are valid antichains") {
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        auto spec = random_complex(rng, 8, 6, 5);
        CHECK(complex_from_maximal(spec.maximal, spec.n) == spec);
        for (const auto& s : spec.maximal) CHECK(s.size() <= 5);
    }
}

}
