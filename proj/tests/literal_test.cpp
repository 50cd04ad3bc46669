#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pnc/literal.hpp"
#include "support/oracles.hpp"

using namespace pnc;

TEST_CASE("parse") {
    const auto u = parse_literal("1,2.5,-3e-2");
    CHECK(u.dim() == 3);
    CHECK(u[0] == 1.0);
    CHECK(u[1] == 2.5);
    CHECK(u[2] == -0.03);

    CHECK_THROWS_AS(parse_literal("1"), Error);       // n >= 2
    CHECK_THROWS_AS(parse_literal("1,,2"), Error);    // empty field
    CHECK_THROWS_AS(parse_literal("1,abc"), Error);   // not a number
    CHECK_THROWS_AS(parse_literal("1,2,"), Error);    // trailing comma
}

TEST_CASE("format round trip at 17 digits") {
    oracle::Rng rng(801);
    for (int i = 0; i < 200; ++i) {
        const auto u = rng.vec(6, -1e3, 1e3);
        const auto back = parse_literal(format_literal(u, 17));
        for (std::size_t j = 0; j < 6; ++j) CHECK(back[j] == u[j]);
    }
    CHECK(format_literal(PolarNComplex{0, 1}, 12) == "0,1");
}

TEST_CASE("path file") {
    std::istringstream in(
        "# a comment\n"
        "0,0,1\n"
        "\n"
        "1,0,0  # trailing comment\n"
        "0,1,0\n");
    const auto verts = read_path_file(in);
    REQUIRE(verts.size() == 3);
    CHECK(verts[0][2] == 1.0);
    CHECK(verts[1][0] == 1.0);
    CHECK(verts[2][1] == 1.0);
}
