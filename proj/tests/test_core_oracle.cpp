#include <doctest.h>

#include "simplicia/generators.hpp"
#include "simplicia/oracle.hpp"
#include "support.hpp"

using namespace simplicia;
using testing::spec_of;

TEST_SUITE("core_oracle") {

TEST_CASE("canonical simplex sorts and dedupes") {
    CHECK(canonical_simplex({3, 1, 4}) == Simplex{1, 3, 4});
    CHECK(canonical_simplex({5}) == Simplex{5});
    CHECK(canonical_simplex({2, 2, 7}) == Simplex{2, 7});
    CHECK_THROWS_AS(canonical_simplex({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_simplex({-3}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_simplex(std::initializer_list<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex::from_sorted({2, 1}), std::invalid_argument);
}

TEST_CASE("complex_from_maximal reduces to an antichain") {
    auto basic = basic_complex();
    CHECK(basic.k() == 3);
    CHECK(basic.n == 6);
    CHECK(basic.dimension() == 3);
    CHECK_FALSE(basic.is_pure());

    auto absorbed = spec_of({{1, 2}, {1, 2, 3}});
    REQUIRE(absorbed.k() == 1);
    CHECK(absorbed.maximal[0] == Simplex{1, 2, 3});

    auto triangle_edges = spec_of({{1, 2}, {2, 3}, {1, 3}});
    CHECK(triangle_edges.k() == 3);
    CHECK(triangle_edges.is_pure());
    CHECK(triangle_edges.maximal.front() == Simplex{1, 2});
}

TEST_CASE("face enumeration") {
    CHECK(oracle_faces(basic_complex()).faces.size() == 27);
    CHECK(oracle_faces(spec_of({{1, 2, 3}})).faces.size() == 7);
    CHECK(oracle_faces(spec_of({{1}})).faces.size() == 1);
    CHECK(all_faces_of(Simplex{1, 2, 3, 4}).size() == 15);
}

TEST_CASE("membership and cofaces") {
    auto o = oracle_faces(basic_complex());
    CHECK(oracle_membership(o, {2, 3, 5}));
    CHECK_FALSE(oracle_membership(o, {1, 2}));
    CHECK(oracle_membership(o, {6}));

    CHECK(oracle_maximal_cofaces(o, {1, 3}) == std::set<Simplex>{{1, 3, 4, 5}, {1, 3, 6}});
    CHECK(oracle_maximal_cofaces(o, {3, 4, 5}) == std::set<Simplex>{{1, 3, 4, 5}, {2, 3, 4, 5}});
    CHECK(oracle_maximal_cofaces(o, {1, 2}).empty());
}

TEST_CASE("remove face") {
    auto basic = basic_complex();
    auto r = oracle_remove_face(basic, {1, 3});
    CHECK(r.applied);
    CHECK(r.spec == spec_of({{2, 3, 4, 5}, {1, 4, 5}, {1, 6}, {3, 6}}, 6));

    r = oracle_remove_face(basic, {6});
    CHECK(r.spec.maximal == spec_of({{1, 3, 4, 5}, {2, 3, 4, 5}, {1, 3}}).maximal);

    r = oracle_remove_face(basic, {1, 2});
    CHECK_FALSE(r.applied);
    CHECK(r.spec == basic);
}

TEST_CASE("elementary collapse") {
    auto basic = basic_complex();
    auto r = oracle_elementary_collapse(basic, {1, 3, 6}, {1, 6});
    CHECK(r.applied);
    CHECK(r.spec.maximal == spec_of({{1, 3, 4, 5}, {2, 3, 4, 5}, {3, 6}}).maximal);

    r = oracle_elementary_collapse(basic, {1, 3, 4, 5}, {3, 4, 5});
    CHECK_FALSE(r.applied);
    CHECK(r.spec == basic);

    r = oracle_elementary_collapse(spec_of({{1, 2, 3}}), {1, 2, 3}, {1, 2});
    CHECK(r.applied);
    CHECK(r.spec.maximal == spec_of({{1, 3}, {2, 3}}).maximal);
}

TEST_CASE("edge contraction") {
    auto basic = basic_complex();
    CHECK(oracle_edge_contract(basic, 1, 2).maximal == spec_of({{2, 3, 4, 5}, {2, 3, 6}}).maximal);
    CHECK(oracle_edge_contract(basic, 6, 5).maximal == spec_of({{1, 3, 4, 5}, {2, 3, 4, 5}}).maximal);
    CHECK(oracle_edge_contract(spec_of({{1, 2}}), 1, 2).maximal == spec_of({{2}}).maximal);
}

TEST_CASE("insert") {
    auto grown = oracle_insert(basic_complex(), {1, 2});
    CHECK(grown.k() == 4);
    CHECK(oracle_insert(basic_complex(), {3, 4, 5}) == basic_complex());
}

TEST_CASE("profile") {
    CHECK(profile(basic_complex()) == ComplexProfile{6, 3, 3, 27});
    CHECK(profile(ComplexSpec{}) == ComplexProfile{0, 0, -1, 0});
    CHECK(profile(spec_of({{1, 2, 3, 4}})) == ComplexProfile{4, 1, 3, 15});
}

}
