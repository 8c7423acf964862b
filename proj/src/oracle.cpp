#include "simplicia/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplicia {

std::vector<Simplex> all_faces_of(const Simplex& s) {
    if (s.size() > 30) throw std::length_error("too many faces to enumerate");
    std::vector<Simplex> out;
    const std::uint64_t count = std::uint64_t{1} << s.size();
    out.reserve(count - 1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        std::vector<Label> w;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1) w.push_back(s[i]);
        out.push_back(Simplex::from_sorted(std::move(w)));
    }
    return out;
}

OracleComplex oracle_faces(const ComplexSpec& spec) {
    OracleComplex o;
    o.n = spec.n;
    for (const auto& m : spec.maximal)
        for (auto& f : all_faces_of(m)) o.faces.insert(std::move(f));
    return o;
}

bool oracle_membership(const OracleComplex& o, const Simplex& s) { return s.empty() || o.faces.contains(s); }

std::set<Simplex> oracle_maximal_cofaces(const OracleComplex& o, const Simplex& s) {
    std::set<Simplex> out;
    if (!oracle_membership(o, s)) return out;
    for (const auto& f : o.faces) {
        if (!f.is_superset_of(s)) continue;
        bool maximal = true;
        for (const auto& g : o.faces) {
            if (g.size() > f.size() && g.is_superset_of(f)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.insert(f);
    }
    return out;
}

ComplexSpec oracle_maximal_of(const std::set<Simplex>& faces, Label n) {
    std::vector<Simplex> maximal;
    for (const auto& f : faces) {
        bool covered = false;
        for (const auto& g : faces) {
            if (g.size() > f.size() && g.is_superset_of(f)) {
                covered = true;
                break;
            }
        }
        if (!covered) maximal.push_back(f);
    }
    ComplexSpec spec;
    spec.n = n;
    spec.maximal = std::move(maximal);
    std::sort(spec.maximal.begin(), spec.maximal.end());
    return spec;
}

OracleResult oracle_remove_face(const ComplexSpec& spec, const Simplex& s) {
    auto o = oracle_faces(spec);
    if (s.empty() || !o.faces.contains(s)) return {spec, false};
    std::erase_if(o.faces, [&](const Simplex& f) { return f.is_superset_of(s); });
    return {oracle_maximal_of(o.faces, spec.n), true};
}

OracleResult oracle_elementary_collapse(const ComplexSpec& spec, const Simplex& tau, const Simplex& sigma) {
    auto o = oracle_faces(spec);
    if (sigma.empty() || tau.size() <= sigma.size() || !tau.is_superset_of(sigma) || !o.faces.contains(tau))
        return {spec, false};
    std::vector<Simplex> proper_cofaces;
    for (const auto& f : o.faces)
        if (f.size() > sigma.size() && f.is_superset_of(sigma)) proper_cofaces.push_back(f);
    if (proper_cofaces.size() != 1 || proper_cofaces.front() != tau) return {spec, false};
    o.faces.erase(tau);
    o.faces.erase(sigma);
    return {oracle_maximal_of(o.faces, spec.n), true};
}

ComplexSpec oracle_edge_contract(const ComplexSpec& spec, Label u, Label v) {
    if (u == v) return spec;
    auto o = oracle_faces(spec);
    std::set<Simplex> image;
    for (const auto& f : o.faces) {
        std::vector<std::int64_t> w;
        for (Label x : f) w.push_back(x == u ? v : x);
        image.insert(canonical_simplex(w));
    }
    return oracle_maximal_of(image, spec.n);
}

ComplexSpec oracle_insert(const ComplexSpec& spec, const Simplex& s) {
    auto o = oracle_faces(spec);
    for (auto& f : all_faces_of(s)) o.faces.insert(std::move(f));
    return oracle_maximal_of(o.faces, std::max(spec.n, s.empty() ? Label{0} : s.last()));
}

ComplexProfile profile(const ComplexSpec& spec) {
    ComplexProfile p;
    p.n = spec.n;
    p.k = spec.k();
    p.d = spec.dimension();
    p.m = oracle_faces(spec).faces.size();
    return p;
}

}  // namespace simplicia
