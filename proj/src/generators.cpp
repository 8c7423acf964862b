#include "simplicia/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace simplicia {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the result unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitGraph {
    std::size_t n;
    std::size_t words;
    std::vector<Bits> adj;  // vertex i (0-based)

    explicit BitGraph(const Graph& g) : n(g.n), words((g.n + 63) / 64), adj(g.n, Bits(words, 0)) {
        for (auto [a, b] : g.edges) {
            adj[a - 1][(b - 1) / 64] |= 1ull << ((b - 1) % 64);
            adj[b - 1][(a - 1) / 64] |= 1ull << ((a - 1) % 64);
        }
    }
};

std::size_t popcount_and(const Bits& a, const Bits& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

bool none(const Bits& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

void bron_kerbosch(const BitGraph& g, std::vector<Label>& r, Bits p, Bits x, std::vector<Simplex>& out) {
    if (none(p) && none(x)) {
        std::vector<Label> w = r;
        std::sort(w.begin(), w.end());
        out.push_back(Simplex::from_sorted(std::move(w)));
        return;
    }
    // Pivot: vertex of P u X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t w = 0; w < g.words; ++w) {
        std::uint64_t bits = p[w] | x[w];
        while (bits) {
            std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            std::size_t c = popcount_and(p, g.adj[v]);
            if (!have || c > best) {
                pivot = v;
                best = c;
                have = true;
            }
        }
    }
    for (std::size_t w = 0; w < g.words; ++w) {
        std::uint64_t cand = p[w] & ~g.adj[pivot][w];
        while (cand) {
            std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(cand));
            cand &= cand - 1;
            Bits p2(g.words), x2(g.words);
            for (std::size_t i = 0; i < g.words; ++i) {
                p2[i] = p[i] & g.adj[v][i];
                x2[i] = x[i] & g.adj[v][i];
            }
            r.push_back(static_cast<Label>(v + 1));
            bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
            r.pop_back();
            p[v / 64] &= ~(1ull << (v % 64));
            x[v / 64] |= 1ull << (v % 64);
        }
    }
}

}  // namespace

ComplexSpec flag_complex(const Graph& g) {
    if (g.n == 0) return ComplexSpec{};
    BitGraph bg(g);
    Bits p(bg.words, 0), x(bg.words, 0);
    for (std::size_t v = 0; v < bg.n; ++v) p[v / 64] |= 1ull << (v % 64);
    std::vector<Simplex> cliques;
    std::vector<Label> r;
    bron_kerbosch(bg, r, p, x, cliques);
    std::sort(cliques.begin(), cliques.end());
    ComplexSpec spec;
    spec.n = g.n;
    spec.maximal = std::move(cliques);
    return spec;
}

Graph neighbourhood_graph(const PointCloud& pc, double r) {
    Graph g;
    g.n = static_cast<Label>(pc.points.size());
    if (r <= 0) return g;
    const double r2 = r * r;
    for (std::size_t i = 0; i < pc.points.size(); ++i)
        for (std::size_t j = i + 1; j < pc.points.size(); ++j) {
            double d2 = 0;
            for (std::size_t c = 0; c < pc.dim; ++c) {
                double t = pc.points[i][c] - pc.points[j][c];
                d2 += t * t;
            }
            if (d2 <= r2) g.edges.emplace_back(static_cast<Label>(i + 1), static_cast<Label>(j + 1));
        }
    return g;
}

ComplexSpec rips_complex(const PointCloud& pc, double r) { return flag_complex(neighbourhood_graph(pc, r)); }

Graph random_graph(Label n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g;
    g.n = n;
    for (Label i = 1; i <= n; ++i)
        for (Label j = i + 1; j <= n; ++j)
            if (rng.uniform() < p) g.edges.emplace_back(i, j);
    return g;
}

PointCloud klein_bottle_sample(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    PointCloud pc;
    pc.dim = 5;
    constexpr double two_pi = 2 * std::numbers::pi;
    for (std::size_t i = 0; i < count; ++i) {
        double u = two_pi * rng.uniform();
        double v = two_pi * rng.uniform();
        double rad = 1 + std::sin(v);
        pc.points.push_back({std::cos(u) * rad, std::sin(u) * rad, std::cos(v) * std::cos(u / 2),
                             std::cos(v) * std::sin(u / 2), std::sin(v) * std::cos(u / 2)});
    }
    return pc;
}

std::pair<double, double> klein_bottle_residuals(const std::vector<double>& x) {
    double rho = std::hypot(x[0], x[1]);
    double s = rho - 1;  // sin v
    double first = s * s + x[2] * x[2] + x[3] * x[3] - 1;
    if (rho == 0) return {first, 0.0};
    // cos^2(u/2) = (1 + cos u) / 2 and cos u = x1 / rho.
    double second = x[4] * x[4] - s * s * (1 + x[0] / rho) / 2;
    return {first, second};
}

ComplexSpec basic_complex() { return complex_from_maximal({{1, 3, 4, 5}, {2, 3, 4, 5}, {1, 3, 6}}); }

ComplexSpec nonpure_complex() { return complex_from_maximal({{1, 2, 3, 6, 7}, {2, 3, 5}, {4, 6, 7}, {4, 5}}); }

ComplexSpec subset_copies(Label n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("subset-copies needs an even n >= 2");
    // Every (n/2)-subset of [n], extended in turn by the copy n + x of each
    // of its elements x.
    const Label half = n / 2;
    std::vector<Simplex> list;
    std::vector<Label> pick(half);
    for (Label i = 0; i < half; ++i) pick[i] = i + 1;
    while (true) {
        for (Label r = 0; r < half; ++r) {
            std::vector<Label> s = pick;
            s.push_back(pick[r] + n);
            list.push_back(Simplex::from_sorted(std::move(s)));
        }
        int i = static_cast<int>(half) - 1;
        while (i >= 0 && pick[i] == n - half + static_cast<Label>(i) + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (Label t = static_cast<Label>(i) + 1; t < half; ++t) pick[t] = pick[t - 1] + 1;
    }
    return complex_from_maximal(std::move(list), 2 * n);
}

ComplexSpec tetra_triangles() { return complex_from_maximal({{1, 2, 4, 6}, {2, 4, 5}, {3, 4, 5}, {1, 4, 7}}); }

ComplexSpec exponential_gap(Label k) {
    std::vector<Simplex> list;
    for (Label i = 1; i <= k; ++i) {
        std::vector<Label> s;
        for (Label v = 1; v <= k + 1; ++v)
            if (v != i) s.push_back(v);
        s.push_back(k + 1 + i);
        list.push_back(Simplex::from_sorted(std::move(s)));
    }
    return complex_from_maximal(std::move(list));
}

ComplexSpec prefix_fan(Label d, Label k) {
    std::vector<Simplex> list;
    for (Label i = 1; i <= k; ++i) {
        std::vector<Label> s;
        for (Label v = 1; v <= d; ++v) s.push_back(v);
        s.push_back(d + i);
        list.push_back(Simplex::from_sorted(std::move(s)));
    }
    return complex_from_maximal(std::move(list));
}

ComplexSpec contraction_heavy(Label d, Label k) {
    if (k % 4 != 0 || k == 0) throw std::invalid_argument("contract-heavy needs k divisible by 4");
    const Label top = k * d / 4 + k / 2 + d + 1;
    std::vector<Simplex> list;
    for (Label i = 1; i <= k / 2; ++i) {
        std::vector<Label> s;
        for (Label v = 1; v <= d; ++v) s.push_back(v);
        s.push_back(d + i);
        list.push_back(Simplex::from_sorted(std::move(s)));
    }
    for (Label i = 1; i <= k / 4; ++i) {
        std::vector<Label> s;
        for (Label v = i * d + 1 + k / 2; v <= i * d + k / 2 + d; ++v) s.push_back(v);
        list.push_back(Simplex::from_sorted(s));
        s.back() = top;
        list.push_back(Simplex::from_sorted(std::move(s)));
    }
    list.push_back(Simplex{1, top});
    return complex_from_maximal(std::move(list));
}

ComplexSpec triangle_tetrahedron(bool alternate) {
    if (alternate) return complex_from_maximal({{1, 3, 4}, {2, 3, 4, 5}});
    return complex_from_maximal({{1, 2, 3}, {1, 2, 4, 5}});
}

ComplexSpec named_example(const std::string& name, Label n, Label k, Label d) {
    if (name == "basic") return basic_complex();
    if (name == "nonpure") return nonpure_complex();
    if (name == "subset-copies") return subset_copies(n);
    if (name == "tetra-triangles") return tetra_triangles();
    if (name == "exp-gap") return exponential_gap(k);
    if (name == "prefix-fan") return prefix_fan(d, k);
    if (name == "contract-heavy") return contraction_heavy(d, k);
    if (name == "tritet") return triangle_tetrahedron(false);
    if (name == "tritet-alt") return triangle_tetrahedron(true);
    throw std::invalid_argument("unknown example: " + name);
}

ComplexSpec random_complex(Rng& rng, Label n, std::size_t max_k, std::size_t max_size) {
    std::size_t k = 1 + rng.below(max_k);
    std::vector<Simplex> list;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t size = 1 + rng.below(std::min<std::size_t>(max_size, n));
        std::vector<Label> all(n);
        for (Label v = 0; v < n; ++v) all[v] = v + 1;
        for (std::size_t t = 0; t < size; ++t) std::swap(all[t], all[t + rng.below(n - t)]);
        std::vector<Label> s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(s.begin(), s.end());
        list.push_back(Simplex::from_sorted(std::move(s)));
    }
    return complex_from_maximal(std::move(list));
}

}  // namespace simplicia
