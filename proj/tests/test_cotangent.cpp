#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germinv/cotangent.hpp"
#include "germinv/io.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

struct Fixture {
    Parametrization phi;
    SubalgebraResult sub;
};

Fixture fixture(const std::string& text)
{
    Fixture f;
    f.phi = parse_instance(text).phi;
    f.sub = delta_and_conductor(f.phi, Options{});
    REQUIRE(f.sub.status == CertStatus::Certified);
    return f;
}

} // namespace

TEST_CASE("ae codim oracle on the named germs")
{
    CHECK(ae_codim_oracle(fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3").phi,
                          fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3").sub) == 1);
    auto node = fixture("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s");
    CHECK(ae_codim_oracle(node.phi, node.sub) == 0);
    auto sp = fixture("n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5");
    CHECK(ae_codim_oracle(sp.phi, sp.sub) == 5);
}

TEST_CASE("le codim equals n*delta")
{
    auto cusp = fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3");
    CHECK(le_codim(cusp.phi, cusp.sub) == 2);
    auto node = fixture("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s");
    CHECK(le_codim(node.phi, node.sub) == 2);
    auto e6 = fixture("n = 2\nbranch b (t): x1 = t^3, x2 = t^4");
    CHECK(le_codim(e6.phi, e6.sub) == 6);
}

TEST_CASE("m1 on the named germs")
{
    auto cusp = fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3");
    CHECK(m1_codim(cusp.phi, cusp.sub) == 1);
    auto e6 = fixture("n = 2\nbranch b (t): x1 = t^3, x2 = t^4");
    CHECK(m1_codim(e6.phi, e6.sub) == 3);
    auto smooth = fixture("n = 2\nbranch b (t): x1 = t, x2 = 0");
    CHECK(m1_codim(smooth.phi, smooth.sub) == 0);
}

TEST_CASE("t1 of Xbar over X = mt - r")
{
    CHECK(t1_xbar_over_x_dim(fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3").phi) == 1);
    CHECK(t1_xbar_over_x_dim(
              fixture("n = 2\nbranch a (t): x1 = t, x2 = 0\nbranch b (s): x1 = 0, x2 = s").phi) == 0);
    CHECK(t1_xbar_over_x_dim(fixture("n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5").phi) == 2);
}

TEST_CASE("assemble: formula identity and the inequality chain on the cusp")
{
    auto f = fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3");
    InvariantRecord rec;
    rec.n = 2;
    rec.r = 1;
    rec.mt = 2;
    rec.delta = f.sub.delta;
    rec.mu = 2 * rec.delta - rec.r + 1;
    rec.conductor_degree = f.sub.cond.degree();
    rec.m1 = m1_codim(f.phi, f.sub);
    rec.deligne_e = 3 * rec.delta - rec.m1;
    rec.cm_t = cm_type(f.phi, f.sub);
    rec.gorenstein = gorenstein_test(rec.delta, rec.conductor_degree);
    auto asm_ = assemble_cotangent(f.phi, f.sub, rec);
    CHECK(asm_.dims.ae_codim_oracle == 1);
    CHECK(asm_.dims.ae_codim_formula == 1);
    CHECK(asm_.dims.base_dim == 1);
    CHECK(asm_.chain_applicable);
    for (const auto& e : asm_.checks) CHECK_MESSAGE(e.pass, e.name, ": ", e.detail);
}

TEST_CASE("truncation independence: oracle at W and W+5 agree")
{
    const char* cases[] = {
        "n = 2\nbranch b (t): x1 = t^2, x2 = t^3",
        "n = 2\nbranch b (t): x1 = t^3, x2 = t^4",
        "n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5",
        "n = 2\nbranch a (t): x1 = t, x2 = t^2\nbranch b (s): x1 = s, x2 = -s^2",
        "n = 2\nbranch b (t): x1 = t^4, x2 = t^6 + t^7",
    };
    for (const char* text : cases) {
        auto f = fixture(text);
        CHECK(ae_codim_oracle(f.phi, f.sub, 0) == ae_codim_oracle(f.phi, f.sub, 5));
    }
}

TEST_CASE("scaling and linear coordinate changes leave the dimensions alone")
{
    auto base = fixture("n = 2\nbranch b (t): x1 = t^2, x2 = t^3 + t^4");
    long de = ae_codim_oracle(base.phi, base.sub);
    long m1 = m1_codim(base.phi, base.sub);

    // t -> 3t
    Parametrization scaled = base.phi;
    for (auto& br : scaled.branches)
        for (auto& p : br.coord) p = p.rescale_param(Rat(3));
    auto ssub = delta_and_conductor(scaled, Options{});
    REQUIRE(ssub.status == CertStatus::Certified);
    CHECK(ssub.delta == base.sub.delta);
    CHECK(ae_codim_oracle(scaled, ssub) == de);
    CHECK(m1_codim(scaled, ssub) == m1);

    // (x1, x2) -> (x1 + 2 x2, x2 - x1)
    Parametrization mixed = base.phi;
    for (auto& br : mixed.branches) {
        Poly a = br.coord[0], b = br.coord[1];
        br.coord[0] = a + b.scaled(Rat(2));
        br.coord[1] = b - a;
    }
    auto msub = delta_and_conductor(mixed, Options{});
    REQUIRE(msub.status == CertStatus::Certified);
    CHECK(msub.delta == base.sub.delta);
    CHECK(msub.cond.per_branch == base.sub.cond.per_branch);
    CHECK(ae_codim_oracle(mixed, msub) == de);
    CHECK(m1_codim(mixed, msub) == m1);
}
