// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frcodes/errors.hpp"
#include "frcodes/incidence.hpp"
#include "support/matrices.hpp"
#include "support/oracles.hpp"
#include "support/random_structures.hpp"

using namespace frcodes;

namespace {

std::vector<std::vector<int>> matrix_of(const IncidenceStructure& s) {
    std::vector<std::vector<int>> m(s.num_blocks(), std::vector<int>(s.num_points(), 0));
    for (std::size_t i = 0; i < s.num_blocks(); ++i)
        for (std::size_t j = 0; j < s.num_points(); ++j) m[i][j] = s.entry(i, j) ? 1 : 0;
    return m;
}

}  // namespace

TEST_CASE("from_matrix builds the line-graph-of-K5 code") {
    const IncidenceStructure s = from_matrix(frtest::example2_matrix());
    CHECK(s.num_blocks() == 5);
    CHECK(s.num_points() == 10);
    for (std::size_t i = 0; i < s.num_blocks(); ++i) CHECK(s.row_sum(i) == 4);
}

TEST_CASE("from_matrix accepts the smallest structure") {
    const IncidenceStructure s = from_matrix({{1}});
    CHECK(s.num_blocks() == 1);
    CHECK(s.num_points() == 1);
    CHECK(s.entry(0, 0));
}

TEST_CASE("from_matrix builds the 15x10 code with row sums 2") {
    const IncidenceStructure s = from_matrix(frtest::example3_matrix());
    CHECK(s.num_blocks() == 15);
    CHECK(s.num_points() == 10);
    for (std::size_t i = 0; i < s.num_blocks(); ++i) CHECK(s.row_sum(i) == 2);
}

TEST_CASE("from_matrix rejects malformed input") {
    CHECK_THROWS_AS(from_matrix({}), FormatError);
    CHECK_THROWS_AS(from_matrix({{}}), FormatError);
    CHECK_THROWS_AS(from_matrix({{1, 0}, {1}}), FormatError);
    CHECK_THROWS_AS(from_matrix({{1, 2}}), FormatError);
    CHECK_THROWS_AS(from_matrix({{1, -1}}), FormatError);
}

TEST_CASE("matrix round trip is lossless") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const IncidenceStructure s = frtest::random_structure(rng);
        CHECK(from_matrix(matrix_of(s)) == s);
    }
}

TEST_CASE("from_rows validates point indices") {
    CHECK_THROWS_AS(from_rows(3, {{0, 3}}), ArgumentError);
    const IncidenceStructure s = from_rows(3, {{0, 2}, {1}});
    CHECK(s.row_sum(0) == 2);
    CHECK(s.row_sum(1) == 1);
}

TEST_CASE("representation cap on the number of points") {
    CHECK_THROWS_AS(from_rows(5000, {{0}}), ArgumentError);
}

TEST_CASE("validate_fr recognizes the paper codes") {
    const FrValidation v2 = validate_fr(from_matrix(frtest::example2_matrix()));
    REQUIRE(v2.ok());
    CHECK(*v2.params == FrParams{5, 4, 10, 2});

    const FrValidation v3 = validate_fr(from_matrix(frtest::example3_matrix()));
    REQUIRE(v3.ok());
    CHECK(*v3.params == FrParams{15, 2, 10, 3});
}

TEST_CASE("validate_fr reports the first offending row") {
    const FrValidation val = validate_fr(from_matrix({{1, 1}, {1, 0}}));
    REQUIRE_FALSE(val.ok());
    CHECK(val.issue->kind == RegularityIssue::Kind::Row);
    CHECK(val.issue->index == 1);
    CHECK(val.issue->sum == 1);
    CHECK(val.issue->expected == 2);
}

TEST_CASE("validate_fr reports the first offending column") {
    const FrValidation val = validate_fr(from_matrix({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE_FALSE(val.ok());
    CHECK(val.issue->kind == RegularityIssue::Kind::Column);
    CHECK(val.issue->index == 1);
    CHECK(val.issue->sum == 2);
    CHECK(val.issue->expected == 1);
}

TEST_CASE("validate_fr flags the all-zero structure as degenerate") {
    const FrValidation val = validate_fr(from_matrix({{0, 0}, {0, 0}}));
    REQUIRE_FALSE(val.ok());
    CHECK(val.issue->kind == RegularityIssue::Kind::Degenerate);
}

TEST_CASE("degenerate but legal codes are accepted") {
    // alpha = v: every node stores everything.
    const FrValidation ones = validate_fr(from_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    REQUIRE(ones.ok());
    CHECK(*ones.params == FrParams{3, 3, 3, 3});

    // rho = 1: no replication at all.
    const FrValidation flat = validate_fr(from_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}}));
    REQUIRE(flat.ok());
    CHECK(*flat.params == FrParams{2, 2, 4, 1});
}

TEST_CASE("FR parameters satisfy n*alpha == v*rho") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 50; ++trial) {
        const FrCode code = frtest::random_fr_code(rng);
        const FrParams p = code.params();
        CHECK(static_cast<long long>(p.n) * p.alpha == static_cast<long long>(p.v) * p.rho);
    }
}

TEST_CASE("dual transposes the incidence matrix") {
    const IncidenceStructure s = from_matrix(frtest::example2_matrix());
    CHECK(dual(s) == from_matrix(frtest::example2_dual_matrix()));
    CHECK(dual(from_matrix({{1}})) == from_matrix({{1}}));
}

TEST_CASE("dual swaps the code parameters") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const FrCode code = frtest::random_fr_code(rng);
        const FrParams p = code.params();
        const FrValidation dv = validate_fr(dual(code.structure()));
        REQUIRE(dv.ok());
        CHECK(*dv.params == FrParams{p.v, p.rho, p.n, p.alpha});
    }
}

TEST_CASE("dual is an involution") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        const IncidenceStructure s = frtest::random_structure(rng);
        CHECK(dual(dual(s)) == s);
    }
}

TEST_CASE("is_simple matches pairwise comparison") {
    const IncidenceStructure ex2 = from_matrix(frtest::example2_matrix());
    const IncidenceStructure ex3 = from_matrix(frtest::example3_matrix());
    CHECK(is_simple(ex2) == frtest::is_simple_oracle(ex2));
    CHECK(is_simple(ex2));
    CHECK(is_simple(ex3) == frtest::is_simple_oracle(ex3));
    CHECK(is_simple(ex3));
    CHECK_FALSE(is_simple(from_matrix({{1, 0}, {1, 0}})));

    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 100; ++trial) {
        const IncidenceStructure s = frtest::random_structure(rng, 8, 6);
        CHECK(is_simple(s) == frtest::is_simple_oracle(s));
    }
}

TEST_CASE("serialize emits the exact text format") {
    CHECK(serialize(from_matrix({{1, 0}, {0, 1}})) == "2 2\n10\n01\n");
}

TEST_CASE("parse round trip") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const IncidenceStructure s = frtest::random_structure(rng);
        CHECK(parse_structure(serialize(s)) == s);
    }
}

TEST_CASE("parse ignores comments and blank lines before the header") {
    const IncidenceStructure s = parse_structure("# a comment\n\n# another\n1 2\n10\n");
    CHECK(s.num_blocks() == 1);
    CHECK(s.num_points() == 2);
    CHECK(s.entry(0, 0));
    CHECK_FALSE(s.entry(0, 1));
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_structure(""), FormatError);
    CHECK_THROWS_AS(parse_structure("# only comments\n"), FormatError);
    CHECK_THROWS_AS(parse_structure("1\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_structure("1 2 3\n10\n"), FormatError);
    CHECK_THROWS_AS(parse_structure("0 2\n"), FormatError);
    CHECK_THROWS_AS(parse_structure("1 2\n1\n"), FormatError);          // short row
    CHECK_THROWS_AS(parse_structure("1 2\n102\n"), FormatError);        // long row
    CHECK_THROWS_AS(parse_structure("1 2\nab\n"), FormatError);         // bad chars
    CHECK_THROWS_AS(parse_structure("2 2\n10\n"), FormatError);         // missing row
    CHECK_THROWS_AS(parse_structure("1 2\r\n10\r\n"), FormatError);     // CRLF
    CHECK_THROWS_AS(parse_structure("1 2\n10\njunk\n"), FormatError);   // trailing junk
    CHECK_THROWS_AS(parse_structure("1 5000\n"), FormatError);          // beyond the cap
}

TEST_CASE("parse reports 1-based line numbers") {
    try {
        parse_structure("# c\n3 3\n111\n11\n111\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("parser survives random garbage") {
    std::mt19937_64 rng(707);
    const std::string alphabet = "01 \n#labv:.-579\r\tx";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 160);
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) text += alphabet[pick(rng)];
        try {
            (void)parse_structure(text);
        } catch (const FormatError&) {
        }
    }
}

TEST_CASE("FrCode constructor rejects irregular structures") {
    CHECK_THROWS_AS(FrCode(from_matrix({{1, 1}, {1, 0}})), ArgumentError);
    const FrCode code(from_matrix(frtest::example2_matrix()));
    CHECK(code.alpha() == 4);
    CHECK(code.rho() == 2);
}

TEST_CASE("check_params accepts valid tuples and rejects bad ones") {
    CHECK_NOTHROW(check_params(FrParams{5, 4, 10, 2}));
    CHECK_THROWS_AS(check_params(FrParams{5, 4, 10, 3}), ArgumentError);
    CHECK_THROWS_AS(check_params(FrParams{0, 1, 1, 0}), ArgumentError);
    CHECK_THROWS_AS(check_params(FrParams{2, 3, 2, 3}), ArgumentError);  // alpha > v
}
