#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "germinv/io.hpp"

using namespace germinv;

TEST_CASE("parse: direct transcription")
{
    auto inst = parse_instance("n = 2\nbranch b1 (t): x1 = t^2, x2 = t^3\n");
    CHECK(inst.phi.n == 2);
    CHECK(inst.phi.r() == 1);
    CHECK(inst.phi.branches[0].coord[0].order().value() == 2);
    CHECK(inst.phi.branches[0].coord[1].order().value() == 3);
    CHECK(!inst.ideal);
}

TEST_CASE("parse: monomial space curve")
{
    auto inst = parse_instance("n = 3\nbranch b1 (t): x1 = t^3, x2 = t^4, x3 = t^5\n");
    CHECK(inst.phi.n == 3);
    CHECK(inst.phi.branches[0].coord[2].order().value() == 5);
}

TEST_CASE("parse: rationals, signs, comments, ideal")
{
    std::string text =
        "# a plane curve\n"
        "n = 2\n"
        "branch b1 (t): x1 = t^2, x2 = t^3 + 1/2 t^4 - 2 t^5  # trailing comment\n"
        "ideal: f = x2^2 - x1^3\n";
    auto inst = parse_instance(text);
    const Poly& p = inst.phi.branches[0].coord[1];
    CHECK(p.terms().size() == 3);
    CHECK(p.terms()[1].second == Rat(1, 2));
    CHECK(p.terms()[2].second == Rat(-2));
    REQUIRE(inst.ideal);
    CHECK(inst.ideal->gens.size() == 1);
    CHECK(inst.ideal->gens[0].second.terms().size() == 2);
}

TEST_CASE("parse errors carry locations and are total")
{
    CHECK_THROWS_AS(parse_instance("branch b1 (t): x1 = 1 + t"), ParseError); // n missing / constant term
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch b1 (t): x1 = 1 + t, x2 = t"), ParseError);
    CHECK_THROWS_AS(parse_instance("n = 1\nbranch b1 (t): x1 = t"), ParseError);
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch a (s): x1 = s, x2 = 0"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch b (t): x1 = t"), ParseError);            // x2 missing
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch b (t): x1 = t, x2 = t^9999999"), ParseError); // exponent cap
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch b (t): x1 = t, x2 = s"), ParseError);    // foreign variable
    CHECK_THROWS_AS(parse_instance("n = 2\nbranch b (t): x1 = t, x2 = t\nideal: f = x1 + 1"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);

    try {
        parse_instance("n = 2\nbranch b1 (t): x1 = 1 + t, x2 = t");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("round-trip: parse . render . parse is the identity")
{
    const char* cases[] = {
        "n = 2\nbranch b1 (t): x1 = t^2, x2 = t^3\n",
        "n = 2\nbranch b1 (t): x1 = t^2, x2 = t^3 + 1/2 t^4\nideal: f = x2^2 - x1^3\n",
        "n = 3\nbranch b1 (t): x1 = t^3, x2 = t^4, x3 = t^5\n",
        "n = 2\nbranch b1 (t): x1 = t, x2 = t^2\nbranch b2 (s): x1 = s, x2 = -s^2\nideal: f = x2^2 - x1^4\n",
        "n = 2\nbranch b1 (u): x1 = 2/3 u^2 - u^4, x2 = u^5\n",
    };
    for (const char* text : cases) {
        auto a = parse_instance(text);
        std::string rendered = render_instance(a);
        auto b = parse_instance(rendered);
        CHECK(a.phi == b.phi);
        CHECK(a.ideal.has_value() == b.ideal.has_value());
        if (a.ideal) CHECK(*a.ideal == *b.ideal);
        CHECK(render_instance(b) == rendered); // canonical form is a fixed point
    }
}

TEST_CASE("fuzz: mutated inputs never escape ParseError")
{
    const std::string base =
        "n = 2\nbranch b1 (t): x1 = t^2, x2 = t^3 + 1/2 t^4\nideal: f = x2^2 - x1^3\n";
    std::mt19937_64 rng(20240417);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int iter = 0; iter < 2000; ++iter) {
        std::string s = base;
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            size_t pos = rng() % (s.size() + 1);
            switch (rng() % 3) {
                case 0:
                    if (pos < s.size()) s[pos] = static_cast<char>(byte(rng));
                    break;
                case 1: s.insert(pos, 1, static_cast<char>(byte(rng))); break;
                default:
                    if (pos < s.size()) s.erase(pos, 1 + rng() % 3);
                    break;
            }
        }
        try {
            auto inst = parse_instance(s);
            (void)inst;
        } catch (const ParseError&) {
            // diagnosed rejection is the expected outcome
        }
    }
}
