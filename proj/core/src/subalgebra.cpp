#include "germinv/subalgebra.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace germinv {

const char* to_string(CertStatus s)
{
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::Stabilized: return "stabilized";
        case CertStatus::Undetermined: return "undetermined";
        case CertStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

const char* to_string(Classification c)
{
    switch (c) {
        case Classification::Smooth: return "smooth";
        case Classification::OrdinaryNode: return "ordinary-node";
        case Classification::SingularFinite: return "singular-finite";
        case Classification::NotFinitelyDetermined: return "not-finitely-determined";
        case Classification::Undetermined: return "undetermined";
    }
    return "?";
}

FinitenessCheck check_finite(const Parametrization& phi)
{
    for (int i = 0; i < phi.r(); ++i) {
        if (phi.branches[static_cast<size_t>(i)].is_zero_map()) {
            return {false, i,
                    "branch " + phi.branches[static_cast<size_t>(i)].name +
                        " is the constant map; its tangent image vanishes"};
        }
    }
    return {};
}

namespace {

// realized orders of a single-branch algebra = pivot exponents of its
// saturated span
std::vector<long> realized_orders(const Parametrization& phi, int branch, int trunc)
{
    Parametrization single;
    single.n = phi.n;
    single.branches.push_back(phi.branches[static_cast<size_t>(branch)]);
    std::vector<int> tr{trunc};
    JetBasis b = saturate_algebra(single.generators(tr), tr);
    std::vector<long> orders;
    for (long m = 0; m < trunc; ++m)
        if (b.has_pivot(b.layout().index(0, 0, m))) orders.push_back(m);
    return orders;
}

} // namespace

PrimitivityResult primitivity_degree(const Parametrization& phi, int branch, int trunc)
{
    const Branch& br = phi.branches[static_cast<size_t>(branch)];
    if (br.is_zero_map()) throw std::invalid_argument("primitivity_degree: constant branch");
    if (br.is_monomial()) {
        // products of monomials never cancel, so the realized orders are
        // exactly the semigroup generated by the coordinate orders
        long k = 0;
        for (const auto& p : br.coord)
            if (auto o = p.order()) k = gcd_long(k, *o);
        return {k, true};
    }
    long k = 0;
    for (long m : realized_orders(phi, branch, trunc))
        if (m > 0) k = gcd_long(k, m);
    if (k == 0) k = 1; // no nonzero realized order below trunc; gcd undetermined, treat as 1 later
    return {k, k == 1};
}

namespace {

ValueSemigroup branch_semigroup(const Parametrization& phi, int branch, int trunc)
{
    ValueSemigroup s;
    s.branch = branch;
    std::vector<long> orders = realized_orders(phi, branch, trunc);
    long g = 0;
    for (long m : orders)
        if (m > 0) g = gcd_long(g, m);
    s.gcd = g == 0 ? 1 : g;
    // conductor: least gamma with the whole tail [gamma, trunc) realized;
    // closure under addition extends the tail to all of [gamma, inf)
    long gamma = trunc;
    for (long m = trunc - 1; m >= 0; --m) {
        if (std::find(orders.begin(), orders.end(), m) == orders.end()) break;
        gamma = m;
    }
    s.conductor = gamma;
    for (long m : orders)
        if (m < gamma) s.elements.push_back(m);
    return s;
}

} // namespace

SubalgebraResult delta_and_conductor(const Parametrization& phi, const Options& opts)
{
    SubalgebraResult res;
    const int r = phi.r();

    Multiplicity mult = multiplicity(phi);
    int start = opts.trunc_start > 0 ? opts.trunc_start : static_cast<int>(std::max<long>(8, 4 * mult.mt));
    start = std::max(start, 4);
    int cap = std::max(opts.trunc_max, start);

    for (int N = start;; N = std::min(2 * N, cap)) {
        // branch-level semigroups first: they gate on gcd = 1
        std::vector<ValueSemigroup> sgs;
        bool gcd_ok = true;
        for (int i = 0; i < r; ++i) {
            sgs.push_back(branch_semigroup(phi, i, N));
            if (sgs.back().gcd != 1) gcd_ok = false;
        }
        if (gcd_ok) {
            std::vector<int> tr(static_cast<size_t>(r), N);
            JetBasis algebra = saturate_algebra(phi.generators(tr), tr);

            std::vector<long> cand(static_cast<size_t>(r));
            bool all_found = true;
            bool margin_ok = true;
            for (int i = 0; i < r; ++i) {
                long c = pure_unit_tail(algebra, i, 0, N);
                if (c >= N) {
                    all_found = false;
                    break;
                }
                cand[static_cast<size_t>(i)] = c;
                if (N < 2 * c + 2) margin_ok = false;
            }

            if (all_found && margin_ok) {
                // ideal-closure verification: the pure window, multiplied by
                // every generator, must stay in the span
                const JetLayout& ly = algebra.layout();
                for (int i = 0; i < r; ++i) {
                    for (long m = cand[static_cast<size_t>(i)]; m < N; ++m) {
                        for (int j = 0; j < phi.n; ++j) {
                            Poly prod = Poly::monomial(m, Rat(1))
                                            .mul_trunc(phi.branches[static_cast<size_t>(i)].coord[static_cast<size_t>(j)], N);
                            if (!algebra.contains(to_jet(ly, 0, i, prod)))
                                throw std::logic_error("conductor window not closed under the generators");
                        }
                    }
                }

                res.status = CertStatus::Certified;
                res.trunc = N;
                res.cond.per_branch = cand;
                res.delta = static_cast<long>(r) * N - algebra.dim();
                res.semigroups = std::move(sgs);
                res.delta_branch.clear();
                for (const auto& s : res.semigroups) res.delta_branch.push_back(s.gaps());

                // projection of the algebra below the conductor exponents
                JetLayout wly;
                wly.slots = 1;
                for (int i = 0; i < r; ++i) wly.windows.push_back({0, cand[static_cast<size_t>(i)]});
                JetBasis wb(wly);
                for (const auto& row : algebra.rows()) {
                    JetVec proj;
                    for (const auto& [c, q] : row) {
                        auto [b, s, e] = algebra.layout().coord(c);
                        if (e < cand[static_cast<size_t>(b)]) proj.emplace_back(wly.index(b, 0, e), q);
                    }
                    wb.insert(std::move(proj));
                }
                res.window_basis = std::move(wb);
                res.algebra = std::move(algebra);
                return res;
            }
        }

        if (N == cap) {
            res.status = CertStatus::Undetermined;
            res.trunc = N;
            if (!gcd_ok) {
                std::string who;
                for (int i = 0; i < r; ++i)
                    if (sgs[static_cast<size_t>(i)].gcd != 1)
                        who += (who.empty() ? "" : ", ") + phi.branches[static_cast<size_t>(i)].name + " (gcd " +
                               std::to_string(sgs[static_cast<size_t>(i)].gcd) + ")";
                res.failure = "realized orders keep a common factor up to the ceiling: " + who;
            } else {
                res.failure = "no conductor found up to N_max=" + std::to_string(cap);
            }
            res.semigroups = std::move(sgs);
            return res;
        }
    }
}

Multiplicity multiplicity(const Parametrization& phi)
{
    Multiplicity m;
    for (const auto& br : phi.branches) {
        long o = br.min_order();
        m.per_branch.push_back(o);
        m.mt += o;
    }
    return m;
}

long constrained_kernel_dim(const SubalgebraResult& sub,
                            const std::vector<std::vector<Poly>>& multipliers,
                            const std::vector<long>& lo)
{
    const JetLayout& wly = sub.window_basis.layout();
    const int r = wly.branches();
    const int nmult = static_cast<int>(multipliers.size());

    // unknown coordinates: branch windows [lo_i, c_i)
    JetLayout uly;
    uly.slots = 1;
    for (int i = 0; i < r; ++i) uly.windows.push_back({lo[static_cast<size_t>(i)], wly.windows[static_cast<size_t>(i)].hi});

    // residuals live in nmult stacked copies of the conductor window
    JetLayout sly = wly;
    sly.slots = nmult;

    JetBasis image(sly);
    long rank = 0;
    for (int l = 0; l < r; ++l) {
        const long ci = wly.windows[static_cast<size_t>(l)].hi;
        for (long q = lo[static_cast<size_t>(l)]; q < ci; ++q) {
            LaurentWindow h = LaurentWindow::unit_vector(q, 1, q);
            JetVec stacked;
            for (int j = 0; j < nmult; ++j) {
                // window part of t^q * multiplier on branch l
                LaurentWindow prodw = h.mul_poly(multipliers[static_cast<size_t>(j)][static_cast<size_t>(l)], ci);
                if (prodw.low() < 0 && prodw.high() > prodw.low())
                    throw std::logic_error("constrained_kernel_dim: product escapes below the window");
                Poly prod;
                for (long e = std::max<long>(prodw.low(), 0); e < prodw.high(); ++e) prod.add_term(e, prodw.coeff(e));
                JetVec res = sub.window_basis.reduce(to_jet(wly, 0, l, prod));
                for (const auto& [c, v] : res) {
                    auto [b, s, e] = wly.coord(c);
                    stacked.emplace_back(sly.index(b, j, e), v);
                }
            }
            std::sort(stacked.begin(), stacked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (image.insert(std::move(stacked)) == JetBasis::InsertResult::Extended) ++rank;
        }
    }
    return uly.dim() - rank;
}

std::optional<long> cm_type(const Parametrization& phi, const SubalgebraResult& sub)
{
    if (sub.status != CertStatus::Certified) return std::nullopt;
    if (phi.r() == 1 && sub.delta == 0) return std::nullopt; // smooth germ

    Multiplicity mult = multiplicity(phi);
    const int r = phi.r();

    std::vector<std::vector<Poly>> multipliers;
    for (int j = 0; j < phi.n; ++j) {
        std::vector<Poly> per_branch;
        for (int i = 0; i < r; ++i) per_branch.push_back(phi.branches[static_cast<size_t>(i)].coord[static_cast<size_t>(j)]);
        multipliers.push_back(std::move(per_branch));
    }
    std::vector<long> lo;
    for (int i = 0; i < r; ++i) lo.push_back(-mult.per_branch[static_cast<size_t>(i)]);

    long solutions = constrained_kernel_dim(sub, multipliers, lo);
    // dim (O:m)/c  minus  dim O/c
    long c = sub.cond.degree();
    return solutions - (c - sub.delta);
}

} // namespace germinv
