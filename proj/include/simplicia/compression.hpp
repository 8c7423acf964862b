#pragma once

#include <cstdint>
#include <string>

#include "simplicia/types.hpp"

namespace simplicia {

/// Non-negative fraction kept in lowest terms. A zero denominator stands for
/// an undefined ratio and evaluates to 0.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Ratio of(std::uint64_t num, std::uint64_t den);
    double value() const noexcept;
    /// Decimal rendering rounded half-up to `precision` digits.
    std::string format(int precision = 1) const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Sizes of the face structures of a complex, counted without building the
/// simplex tree. Works on the families of maximal simplices seen below each
/// tree node, so the cost follows the compressed size rather than m.
struct FaceStructureCounts {
    std::uint64_t st_edges = 0;  // m
    std::uint64_t msa_states = 0;
    std::uint64_t msa_transitions = 0;
    std::uint64_t cst_nodes = 0;
    std::uint64_t cst_edges = 0;
};

FaceStructureCounts count_face_structures(const ComplexSpec& spec);

struct CompressionReport {
    std::uint64_t st = 0;     // |ST|
    std::uint64_t cst = 0;    // |C(ST)|
    std::uint64_t mxst = 0;   // |MxST|
    std::uint64_t cmxst = 0;  // |C(MxST)|
    std::uint64_t msa_states = 0;
    Ratio rho_st;
    Ratio rho_mxst;
};

CompressionReport compression_report(const ComplexSpec& spec);

}  // namespace simplicia
