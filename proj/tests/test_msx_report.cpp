#include <doctest.h>

#include "simplicia/generators.hpp"
#include "simplicia/msx.hpp"
#include "simplicia/report.hpp"
#include "support.hpp"

using namespace simplicia;

namespace {

bool all_ok(const std::vector<CheckItem>& items) {
    for (const auto& it : items)
        if (!it.ok) {
            MESSAGE(it.name << ": " << it.detail);
            return false;
        }
    return true;
}

bool has(const std::vector<CheckItem>& items, const std::string& name) {
    for (const auto& it : items)
        if (it.name == name) return true;
    return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse") {
    CHECK(parse_msx("n 6\n1 3 4 5\n2 3 4 5\n1 3 6\n") == basic_complex());
    auto single = parse_msx("n 1\n1\n");
    CHECK(single.k() == 1);
    CHECK(single.maximal[0] == Simplex{1});
    CHECK(parse_msx("# comment\nn 3\n1 2 # edge\n\n").k() == 1);
    CHECK(parse_msx("n 0\n").empty());

    auto fails = [](const char* text, std::size_t line) {
        try {
            parse_msx(text);
        } catch (const MsxError& e) {
            return e.line() == line;
        }
        return false;
    };
    CHECK(fails("n 3\n2 1\n", 2));
    CHECK(fails("n 3\n1 4\n", 2));
    CHECK(fails("n 3\n0 1\n", 2));
    CHECK(fails("1 2\n", 1));
    CHECK(fails("", 1));
    CHECK(fails("n 3\n1 2\n\n2 3\n", 3));
    CHECK(fails("n 3\n1 x\n", 2));
}

TEST_CASE("round trip") {
    for (const auto& spec : testing::corpus(20, 3)) CHECK(parse_msx(serialize_msx(spec)) == spec);
}

TEST_CASE("stats table") {
    auto row = stats_row(basic_complex());
    CHECK(row.sizes.st == 27);
    CHECK(row.sizes.mxst == 9);
    CHECK(row.sizes.cst == 19);
    auto t = stats_table({row});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.header.front() == "n");
    CHECK(t.render(true).find("\n6,3,3,27,9,19,1.4,8,1.1\n") != std::string::npos);

    auto empty = stats_row(ComplexSpec{});
    CHECK(empty.sizes.st == 0);
    CHECK(empty.k == 0);
}

TEST_CASE("gamma table") {
    auto row = gamma_row(basic_complex());
    CHECK(row.gamma == std::vector<std::size_t>{3, 2, 2, 1});
    CHECK(row.m == 27);
    auto text = gamma_table({gamma_row(complex_from_maximal({{1, 2}}))}).render(false);
    CHECK(text.find("-") != std::string::npos);
}

TEST_CASE("invariant suite") {
    auto items = check_complex(basic_complex());
    CHECK(all_ok(items));
    CHECK(has(items, "msa-nerode"));
    CHECK(has(items, "transforms-match-direct"));

    CheckOptions strict;
    strict.expect_no_mxst_merge = true;
    auto copies = check_complex(subset_copies(6), strict);
    CHECK(all_ok(copies));
    CHECK(has(copies, "mxst-no-merge"));
    CHECK_FALSE(all_ok(check_complex(basic_complex(), strict)));
}

TEST_CASE("tree dumps") {
    auto basic = basic_complex();
    std::vector<Simplex> faces;
    for (const auto& f : oracle_faces(basic).faces) faces.push_back(f);
    CHECK(all_ok(check_st_dump(6, faces, &basic)));

    auto missing = faces;
    missing.erase(std::find(missing.begin(), missing.end(), Simplex{3, 4}));
    auto r = check_st_dump(6, missing, &basic);
    bool closure_failed = false;
    for (const auto& it : r) closure_failed |= it.name == "st-closure" && !it.ok;
    CHECK(closure_failed);

    auto doubled = faces;
    doubled.push_back(Simplex{1});
    CHECK_FALSE(all_ok(check_st_dump(6, doubled, nullptr)));
}

TEST_CASE("bench consistency and determinism") {
    BenchOptions opts;
    opts.runs = 2;
    opts.queries = 30;
    opts.operations = 3;
    auto a = run_bench(basic_complex(), opts);
    CHECK(a.consistent);
    CHECK(a.timings.rows.size() == 6);
    auto b = run_bench(exponential_gap(4), opts);
    CHECK(b.consistent);
}

}
