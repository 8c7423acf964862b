#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplicia/compression.hpp"
#include "simplicia/types.hpp"

namespace simplicia {

/// Plain text table rendered as TSV or CSV.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(bool csv) const;
};

/// `param_name`/`param_value` describe the generator parameter (r or p);
/// both may be empty.
struct StatsRow {
    Label n = 0;
    std::string param_name;
    std::string param_value;
    int d = -1;
    std::size_t k = 0;
    CompressionReport sizes;
};

StatsRow stats_row(const ComplexSpec& spec, std::string param_name = "", std::string param_value = "");
Table stats_table(const std::vector<StatsRow>& rows, int precision = 1);

struct GammaRow {
    Label n = 0;
    std::string param_name;
    std::string param_value;
    int d = -1;
    std::size_t k = 0;
    std::uint64_t m = 0;
    std::vector<std::size_t> gamma;  // up to Gamma_3
    std::size_t sal_edges = 0;
};

GammaRow gamma_row(const ComplexSpec& spec, std::string param_name = "", std::string param_value = "");
Table gamma_table(const std::vector<GammaRow>& rows);

struct CheckItem {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct CheckOptions {
    bool expect_no_mxst_merge = false;
    /// Explicit tree and automaton checks run only when m stays below this.
    std::uint64_t explicit_face_limit = 200000;
};

/// Runs every applicable invariant on the complex. Exhaustive checks are
/// limited to n <= 10 (n <= 8 for the label permutation search).
std::vector<CheckItem> check_complex(const ComplexSpec& spec, const CheckOptions& options = {});

/// Checks a face list claimed to be the simplex tree of `reference` (or just
/// its closure when no reference is given).
std::vector<CheckItem> check_st_dump(Label n, const std::vector<Simplex>& faces, const ComplexSpec* reference);

struct BenchOptions {
    std::uint64_t seed = 1;
    std::size_t runs = 5;
    std::size_t queries = 200;
    std::size_t operations = 10;
};

struct BenchResult {
    Table timings;
    bool consistent = true;
    std::string mismatch;
};

/// Times build, membership and the four operations on every structure, and
/// checks that all structures give identical answers.
BenchResult run_bench(const ComplexSpec& spec, const BenchOptions& options);

}  // namespace simplicia
