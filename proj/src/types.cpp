#include "simplicia/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace simplicia {

Simplex::Simplex(std::initializer_list<Label> labels) : Simplex(from_sorted(std::vector<Label>(labels))) {}

Simplex Simplex::from_sorted(std::vector<Label> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 0) throw std::invalid_argument("vertex labels must be positive");
        if (i > 0 && labels[i - 1] >= labels[i])
            throw std::invalid_argument("simplex labels must be strictly increasing");
    }
    Simplex s;
    s.labels_ = std::move(labels);
    return s;
}

bool Simplex::contains(Label v) const { return std::binary_search(labels_.begin(), labels_.end(), v); }

bool Simplex::is_superset_of(const Simplex& other) const {
    return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end());
}

Simplex Simplex::without(Label v) const {
    Simplex s;
    s.labels_.reserve(labels_.size());
    for (Label x : labels_)
        if (x != v) s.labels_.push_back(x);
    return s;
}

std::string Simplex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(labels_[i]);
    }
    return out.empty() ? "{}" : out;
}

Simplex canonical_simplex(std::span<const std::int64_t> labels) {
    if (labels.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    std::vector<Label> out;
    out.reserve(labels.size());
    for (auto x : labels) {
        if (x <= 0) throw std::invalid_argument("vertex label " + std::to_string(x) + " is not positive");
        if (x > static_cast<std::int64_t>(UINT32_MAX - 1)) throw std::invalid_argument("vertex label too large");
        out.push_back(static_cast<Label>(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Simplex::from_sorted(std::move(out));
}

Simplex canonical_simplex(std::initializer_list<std::int64_t> labels) {
    return canonical_simplex(std::span<const std::int64_t>(labels.begin(), labels.size()));
}

int ComplexSpec::dimension() const noexcept {
    int d = -1;
    for (const auto& s : maximal) d = std::max(d, s.dimension());
    return d;
}

bool ComplexSpec::is_pure() const noexcept {
    return std::all_of(maximal.begin(), maximal.end(),
                       [&](const Simplex& s) { return s.size() == maximal.front().size(); });
}

ComplexSpec complex_from_maximal(std::vector<Simplex> list, Label min_n) {
    std::erase_if(list, [](const Simplex& s) { return s.empty(); });
    std::sort(list.begin(), list.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    list.erase(std::unique(list.begin(), list.end()), list.end());

    // Larger simplices come first, so a simplex can only be absorbed by one
    // already kept. Candidates are looked up through their first vertex.
    std::unordered_map<Label, std::vector<std::size_t>> by_vertex;
    ComplexSpec spec;
    spec.n = min_n;
    for (auto& s : list) {
        bool absorbed = false;
        if (auto it = by_vertex.find(s[0]); it != by_vertex.end()) {
            for (std::size_t idx : it->second) {
                if (spec.maximal[idx].size() > s.size() && spec.maximal[idx].is_superset_of(s)) {
                    absorbed = true;
                    break;
                }
            }
        }
        if (absorbed) continue;
        for (Label v : s) by_vertex[v].push_back(spec.maximal.size());
        spec.n = std::max(spec.n, s.last());
        spec.maximal.push_back(std::move(s));
    }
    std::sort(spec.maximal.begin(), spec.maximal.end());
    return spec;
}

}  // namespace simplicia
