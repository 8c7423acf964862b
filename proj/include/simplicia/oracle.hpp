#pragma once

// Reference implementation of complex operations over the explicit face set.
// Everything here favours obviousness over speed: it enumerates every face of
// every maximal simplex and is meant for test-sized complexes only.

#include <set>
#include <vector>

#include "simplicia/types.hpp"

namespace simplicia {

struct OracleComplex {
    Label n = 0;
    std::set<Simplex> faces;  // non-empty faces only
};

/// Result of an operation that may refuse to change the complex.
struct OracleResult {
    ComplexSpec spec;
    bool applied = true;
};

OracleComplex oracle_faces(const ComplexSpec& spec);
bool oracle_membership(const OracleComplex& o, const Simplex& s);
std::set<Simplex> oracle_maximal_cofaces(const OracleComplex& o, const Simplex& s);

/// Maximal simplices of an explicit face set.
ComplexSpec oracle_maximal_of(const std::set<Simplex>& faces, Label n);

/// Removes s and all of its cofaces. `applied` is false when s is not a face.
OracleResult oracle_remove_face(const ComplexSpec& spec, const Simplex& s);

/// Removes the free pair (tau, sigma). `applied` is false ("not free") unless
/// tau is the only proper coface of sigma.
OracleResult oracle_elementary_collapse(const ComplexSpec& spec, const Simplex& tau, const Simplex& sigma);

/// Replaces u by v in every simplex (u is merged into v).
ComplexSpec oracle_edge_contract(const ComplexSpec& spec, Label u, Label v);

/// Adds s and all its faces.
ComplexSpec oracle_insert(const ComplexSpec& spec, const Simplex& s);

ComplexProfile profile(const ComplexSpec& spec);

/// All non-empty subsets of s, in no particular order.
std::vector<Simplex> all_faces_of(const Simplex& s);

}  // namespace simplicia
