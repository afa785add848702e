#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germinv/io.hpp"
#include "germinv/subalgebra.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

Parametrization parse_phi(const std::string& text) { return parse_instance(text).phi; }

SubalgebraResult certified(const Parametrization& phi)
{
    SubalgebraResult sub = delta_and_conductor(phi, Options{});
    REQUIRE(sub.status == CertStatus::Certified);
    return sub;
}

} // namespace

TEST_CASE("check_finite")
{
    CHECK(check_finite(parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^3")).finite);
    auto bad = check_finite(parse_phi("n = 2\nbranch b (t): x1 = 0, x2 = 0"));
    CHECK(!bad.finite);
    CHECK(bad.branch == 0);
    auto two = check_finite(parse_phi("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = 0"));
    CHECK(!two.finite);
    CHECK(two.branch == 1);
}

TEST_CASE("primitivity degree")
{
    CHECK(primitivity_degree(parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^3"), 0, 16).k == 1);
    auto imp = primitivity_degree(parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^4"), 0, 16);
    CHECK(imp.k == 2);
    CHECK(imp.exact); // monomial, hence certified
    auto prim = primitivity_degree(parse_phi("n = 2\nbranch b (t): x1 = t^3, x2 = t^4 + t^5"), 0, 16);
    CHECK(prim.k == 1);
}

TEST_CASE("a non-monomial gcd observed at low truncation can drop later")
{
    // orders 4 and 6 suggest gcd 2, but (x2^2 - x1^3) has odd order 13
    auto phi = parse_phi("n = 2\nbranch b (t): x1 = t^4, x2 = t^6 + t^7");
    auto low = primitivity_degree(phi, 0, 10);
    CHECK(low.k == 2);
    CHECK(!low.exact);
    auto high = primitivity_degree(phi, 0, 20);
    CHECK(high.k == 1);
}

TEST_CASE("delta and conductor: cusp")
{
    auto sub = certified(parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^3"));
    CHECK(sub.delta == 1);
    CHECK(sub.cond.per_branch == std::vector<long>{2});
    CHECK(sub.semigroups[0].conductor == 2);
    CHECK(sub.semigroups[0].elements == std::vector<long>{0});
    CHECK(sub.semigroups[0].gaps() == 1);
}

TEST_CASE("delta and conductor: node")
{
    auto sub = certified(parse_phi("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s"));
    CHECK(sub.delta == 1);
    CHECK(sub.cond.per_branch == std::vector<long>{1, 1});
    CHECK(sub.cond.degree() == 2);
}

TEST_CASE("delta and conductor: E6 semigroup <3,4>")
{
    auto sub = certified(parse_phi("n = 2\nbranch b (t): x1 = t^3, x2 = t^4"));
    CHECK(sub.delta == 3);
    CHECK(sub.cond.per_branch == std::vector<long>{6});
    testutil::SemigroupOracle s({3, 4});
    CHECK(s.gaps() == std::vector<long>{1, 2, 5});
    CHECK(sub.semigroups[0].elements == s.elements_below_conductor());
}

TEST_CASE("coincident smooth branches never certify")
{
    Options opts;
    opts.trunc_max = 64;
    auto sub = delta_and_conductor(
        parse_phi("n = 2\nbranch a (t): x1 = t, x2 = t^2\nbranch b (s): x1 = s, x2 = s^2"), opts);
    CHECK(sub.status == CertStatus::Undetermined);
}

TEST_CASE("monomial curves agree with the brute-force semigroup oracle")
{
    testutil::RandomCorpus corpus(318);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(corpus.pick(0, 2));
        auto exps = corpus.primitive_exponents(n);
        Parametrization phi = testutil::monomial_curve({exps});
        auto sub = certified(phi);
        testutil::SemigroupOracle oracle(exps);
        CHECK(sub.delta == oracle.delta());
        CHECK(sub.cond.per_branch[0] == oracle.conductor());
        CHECK(sub.semigroups[0].elements == oracle.elements_below_conductor());
        CHECK(sub.semigroups[0].gcd == 1);

        // Cohen-Macaulay type vs pseudo-Frobenius count
        auto t = cm_type(phi, sub);
        if (sub.delta > 0) {
            REQUIRE(t.has_value());
            CHECK(*t == static_cast<long>(oracle.pseudo_frobenius().size()));
        }
    }
}

TEST_CASE("multiplicity")
{
    auto m = multiplicity(parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^3"));
    CHECK(m.mt == 2);
    auto node = multiplicity(parse_phi("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s"));
    CHECK(node.mt == 2);
    CHECK(node.per_branch == std::vector<long>{1, 1});
    auto sp = multiplicity(parse_phi("n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5"));
    CHECK(sp.mt == 3);
}

TEST_CASE("gorenstein test")
{
    CHECK(gorenstein_test(1, 2));  // cusp
    CHECK(!gorenstein_test(2, 3)); // <3,4,5>
    CHECK(gorenstein_test(3, 6));  // <3,4>
}

TEST_CASE("cm type on the named examples")
{
    {
        auto phi = parse_phi("n = 2\nbranch b (t): x1 = t^2, x2 = t^3");
        CHECK(cm_type(phi, certified(phi)).value() == 1);
    }
    {
        auto phi = parse_phi("n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5");
        CHECK(cm_type(phi, certified(phi)).value() == 2);
    }
    {
        auto phi = parse_phi("n = 4\nbranch b (t): x1 = t^4, x2 = t^5, x3 = t^6, x4 = t^7");
        CHECK(cm_type(phi, certified(phi)).value() == 3);
    }
    {
        auto phi = parse_phi("n = 2\nbranch b (t): x1 = t, x2 = 0"); // smooth
        CHECK(!cm_type(phi, certified(phi)).has_value());
    }
}

TEST_CASE("certified values are stable under a doubled ceiling")
{
    auto phi = parse_phi("n = 2\nbranch b (t): x1 = t^4, x2 = t^6 + t^7");
    Options base;
    auto a = delta_and_conductor(phi, base);
    Options doubled;
    doubled.trunc_start = 2 * a.trunc;
    auto b = delta_and_conductor(phi, doubled);
    REQUIRE(a.status == CertStatus::Certified);
    REQUIRE(b.status == CertStatus::Certified);
    CHECK(a.delta == b.delta);
    CHECK(a.cond.per_branch == b.cond.per_branch);
    for (size_t i = 0; i < a.semigroups.size(); ++i) {
        CHECK(a.semigroups[i].elements == b.semigroups[i].elements);
        CHECK(a.semigroups[i].conductor == b.semigroups[i].conductor);
    }
}

TEST_CASE("multibranch glue bound delta >= sum delta_i + (r-1)")
{
    const char* cases[] = {
        "n = 2\nbranch a (t): x1 = t, x2 = t^2\nbranch b (s): x1 = s, x2 = -s^2",
        "n = 2\nbranch a (t): x1 = t^2, x2 = t^3\nbranch b (s): x1 = 0, x2 = s",
        "n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s",
    };
    for (const char* text : cases) {
        auto sub = certified(parse_phi(text));
        long sum = 0;
        for (long d : sub.delta_branch) sum += d;
        CHECK(sub.delta >= sum + static_cast<long>(sub.delta_branch.size()) - 1);
    }
}
