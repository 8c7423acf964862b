#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simplicia {

using Label = std::uint32_t;

/// A simplex stored as its word: strictly increasing positive vertex labels.
/// The default-constructed value is the empty face, which only ever appears
/// as the root of tree structures.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Label> labels);

    /// Takes labels that are already strictly increasing and positive.
    /// Throws std::invalid_argument otherwise.
    static Simplex from_sorted(std::vector<Label> labels);

    std::span<const Label> labels() const noexcept { return labels_; }
    const std::vector<Label>& word() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    int dimension() const noexcept { return static_cast<int>(labels_.size()) - 1; }
    Label last() const { return labels_.back(); }
    Label operator[](std::size_t i) const { return labels_[i]; }
    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }

    bool contains(Label v) const;
    /// True iff every label of `other` occurs in this simplex.
    bool is_superset_of(const Simplex& other) const;
    Simplex without(Label v) const;
    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    std::vector<Label> labels_;
};

/// Sorts and deduplicates `labels`. Rejects empty input and non-positive labels.
Simplex canonical_simplex(std::span<const std::int64_t> labels);
Simplex canonical_simplex(std::initializer_list<std::int64_t> labels);

/// A complex given by its maximal simplices. `maximal` is an inclusion
/// antichain kept in lexicographic order, and every label is <= n.
struct ComplexSpec {
    Label n = 0;
    std::vector<Simplex> maximal;

    std::size_t k() const noexcept { return maximal.size(); }
    int dimension() const noexcept;
    bool is_pure() const noexcept;
    bool empty() const noexcept { return maximal.empty(); }

    friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

/// Deduplicates, drops simplices contained in others and sorts. `n` is the
/// larger of `min_n` and the largest label present.
ComplexSpec complex_from_maximal(std::vector<Simplex> list, Label min_n = 0);

struct ComplexProfile {
    Label n = 0;
    std::size_t k = 0;
    int d = -1;  // -1 means no simplex
    std::uint64_t m = 0;

    friend bool operator==(const ComplexProfile&, const ComplexProfile&) = default;
};

}  // namespace simplicia
