#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "germinv/jetlin.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

JetLayout simple_layout(int dim)
{
    JetLayout ly;
    ly.slots = 1;
    ly.windows.push_back({0, dim});
    return ly;
}

JetVec unit(int coord) { return {{coord, Rat(1)}}; }

MultiSeries monomial_gen(const std::vector<int>& exps, int trunc)
{
    // one exponent per branch; -1 means the zero series on that branch
    MultiSeries m;
    for (int e : exps) {
        TruncSeries s(trunc);
        if (e >= 0) s.set_coeff(e, Rat(1));
        m.comp.push_back(s);
    }
    return m;
}

} // namespace

TEST_CASE("insert and contains")
{
    JetBasis b(simple_layout(4));
    CHECK(b.insert(unit(0)) == JetBasis::InsertResult::Extended);
    CHECK(b.dim() == 1);
    CHECK(b.insert({{0, Rat(2)}}) == JetBasis::InsertResult::AlreadyInSpan);
    CHECK(b.insert(jet_axpy(unit(0), Rat(1), unit(1))) == JetBasis::InsertResult::Extended);
    CHECK(b.dim() == 2);

    CHECK(b.contains({{0, Rat(5)}}));
    CHECK(!b.contains(unit(2)));
    CHECK(b.contains({}));
}

TEST_CASE("coordinate-system mismatch is an error")
{
    JetBasis b(simple_layout(4));
    CHECK_THROWS(b.insert(unit(7)));
}

TEST_CASE("codim within an ambient window")
{
    JetBasis b(simple_layout(4));
    b.insert(unit(0));
    CHECK(b.codim({0, 1, 2}) == 2);
    CHECK(b.codim({0}) == 0);

    JetBasis empty(simple_layout(4));
    CHECK(empty.codim({0, 1, 2, 3}) == 4);

    b.insert(unit(3));
    CHECK_THROWS(b.codim({0, 1})); // a row lives outside the ambient
}

TEST_CASE("saturate: cusp algebra matches the semigroup oracle")
{
    std::vector<MultiSeries> gens{monomial_gen({2}, 7), monomial_gen({3}, 7)};
    JetBasis b = saturate_algebra(gens, {7});
    testutil::SemigroupOracle s({2, 3});
    long expected_dim = 7;
    for (long g : s.gaps())
        if (g < 7) --expected_dim;
    CHECK(b.dim() == expected_dim); // 6: gap only at t^1
    CHECK(!b.has_pivot(b.layout().index(0, 0, 1)));
}

TEST_CASE("saturate: a smooth branch fills the window")
{
    std::vector<MultiSeries> gens{monomial_gen({1}, 5)};
    JetBasis b = saturate_algebra(gens, {5});
    CHECK(b.dim() == 5);
}

TEST_CASE("saturate: node algebra has codimension one")
{
    // generators (t,0) and (0,s) of the node algebra at N=4
    std::vector<MultiSeries> gens{monomial_gen({1, -1}, 4), monomial_gen({-1, 1}, 4)};
    JetBasis b = saturate_algebra(gens, {4, 4});
    CHECK(b.layout().dim() == 8);
    CHECK(b.dim() == 7);
}

TEST_CASE("saturate rejects zero-order generator components")
{
    MultiSeries bad;
    TruncSeries s(4);
    s.set_coeff(0, Rat(1));
    bad.comp.push_back(s);
    CHECK_THROWS(saturate_algebra({bad}, {4}));
}

TEST_CASE("span dimension is insertion-order independent")
{
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<JetVec> vecs;
        for (int v = 0; v < 8; ++v) {
            JetVec w;
            for (int c = 0; c < 6; ++c) {
                long x = std::uniform_int_distribution<long>(-2, 2)(rng);
                if (x != 0) w.emplace_back(c, Rat(x));
            }
            vecs.push_back(std::move(w));
        }
        JetBasis a(simple_layout(6));
        for (const auto& v : vecs) a.insert(v);
        std::shuffle(vecs.begin(), vecs.end(), rng);
        JetBasis b(simple_layout(6));
        for (const auto& v : vecs) b.insert(v);
        CHECK(a.dim() == b.dim());
    }
}

TEST_CASE("saturation at 2N restricted below N contains the N result")
{
    std::vector<std::vector<std::vector<long>>> curves = {{{3, 4}}, {{2, 7}}, {{4, 5, 6}}};
    for (const auto& exps : curves) {
        Parametrization phi = testutil::monomial_curve(exps);
        const int N = 12;
        JetBasis at_n = saturate_algebra(phi.generators({N}), {N});
        JetBasis at_2n = saturate_algebra(phi.generators({2 * N}), {2 * N});
        JetBasis proj(simple_layout(N));
        for (const auto& row : at_2n.rows()) {
            JetVec p;
            for (const auto& [c, q] : row) {
                auto [b, s, e] = at_2n.layout().coord(c);
                if (e < N) p.emplace_back(proj.layout().index(b, s, e), q);
            }
            std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            proj.insert(std::move(p));
        }
        for (const auto& row : at_n.rows()) CHECK(proj.contains(row));
    }
}

TEST_CASE("enlarging the generator set never increases the codimension")
{
    const int N = 10;
    Parametrization small = testutil::monomial_curve({{4, 5}});
    Parametrization large = testutil::monomial_curve({{4, 5, 6}});
    JetBasis a = saturate_algebra(small.generators({N}), {N});
    JetBasis b = saturate_algebra(large.generators({N}), {N});
    CHECK(b.dim() >= a.dim());
}

TEST_CASE("layout indexing round-trips")
{
    JetLayout ly;
    ly.slots = 3;
    ly.windows.push_back({0, 4});
    ly.windows.push_back({-2, 5});
    for (int flat = 0; flat < ly.dim(); ++flat) {
        auto [b, s, e] = ly.coord(flat);
        CHECK(ly.index(b, s, e) == flat);
    }
}
