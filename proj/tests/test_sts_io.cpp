#include <doctest.h>

#include <sstream>
#include <string>

#include "stsdisc/errors.hpp"
#include "stsdisc/sts.hpp"

using namespace stsdisc;

TEST_CASE("systems round-trip through the text format") {
    for (int n : {7, 9, 13, 15}) {
        SteinerSystem original = canonical_system(Order(n));
        std::ostringstream out;
        write_sts(out, original);
        std::istringstream in(out.str());
        CHECK(read_sts(in) == original);
    }
    LabelledFamily family = enumerate_all_labelled(Order(7));
    for (const SteinerSystem& system : family.systems) {
        std::ostringstream out;
        write_sts(out, system);
        std::istringstream in(out.str());
        CHECK(read_sts(in) == system);
    }
}

TEST_CASE("the header names the order") {
    std::ostringstream out;
    write_sts(out, canonical_system(Order(7)));
    CHECK(out.str().rfind("n=7\n", 0) == 0);
}

TEST_CASE("parse failures are loud") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_sts(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("order 7\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("n=8\n"), FeasibilityError);
    CHECK_THROWS_AS(parse("n=banana\n"), ParseError);
    CHECK_THROWS_AS(parse("n=7\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("n=7\n0 1 2\n"), InvalidSystemError);  // too few blocks
    CHECK_THROWS_AS(parse("n=7\n2 1 0\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"),
                    InvalidTripleError);
}

TEST_CASE("a valid file parses to a valid system") {
    std::string fano =
        "n=7\n"
        "0 1 2\n"
        "0 3 4\n"
        "0 5 6\n"
        "1 3 5\n"
        "1 4 6\n"
        "2 3 6\n"
        "2 4 5\n";
    std::istringstream in(fano);
    SteinerSystem system = read_sts(in);
    CHECK(system.order().n() == 7);
    CHECK(system.blocks().size() == 7);
}
