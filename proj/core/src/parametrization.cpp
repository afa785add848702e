#include "germinv/parametrization.hpp"

#include <climits>
#include <stdexcept>

namespace germinv {

void XPoly::add_term(const Exponents& alpha, const Rat& coeff)
{
    if (static_cast<int>(alpha.size()) != nvars_) throw std::invalid_argument("XPoly: exponent arity mismatch");
    if (germinv::is_zero(coeff)) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (germinv::is_zero(it->second)) terms_.erase(it);
    }
}

bool XPoly::has_constant_term() const
{
    Exponents zero(static_cast<size_t>(nvars_), 0);
    return terms_.count(zero) != 0;
}

long XPoly::total_degree() const
{
    long deg = -1;
    for (const auto& [alpha, c] : terms_) {
        long d = 0;
        for (long e : alpha) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

XPoly XPoly::partial(int var) const
{
    XPoly r(nvars_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[static_cast<size_t>(var)] == 0) continue;
        Exponents beta = alpha;
        long e = beta[static_cast<size_t>(var)]--;
        r.add_term(beta, c * e);
    }
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const
{
    XPoly r(nvars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Exponents s(a);
            for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            r.add_term(s, ca * cb);
        }
    return r;
}

XPoly XPoly::operator+(const XPoly& o) const
{
    XPoly r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

XPoly XPoly::scaled(const Rat& c) const
{
    XPoly r(nvars_);
    for (const auto& [a, q] : terms_) r.add_term(a, q * c);
    return r;
}

XPoly XPoly::substitute_linear(const std::vector<std::vector<Rat>>& M) const
{
    XPoly result(nvars_);
    for (const auto& [alpha, c] : terms_) {
        XPoly acc(nvars_);
        acc.add_term(Exponents(static_cast<size_t>(nvars_), 0), c);
        for (int j = 0; j < nvars_; ++j) {
            XPoly linear(nvars_);
            for (int m = 0; m < nvars_; ++m) {
                Exponents e(static_cast<size_t>(nvars_), 0);
                e[static_cast<size_t>(m)] = 1;
                linear.add_term(e, M[static_cast<size_t>(j)][static_cast<size_t>(m)]);
            }
            for (long p = 0; p < alpha[static_cast<size_t>(j)]; ++p) acc = acc * linear;
        }
        result = result + acc;
    }
    return result;
}

Poly XPoly::compose(const std::vector<Poly>& branch_coords) const
{
    if (static_cast<int>(branch_coords.size()) != nvars_) throw std::invalid_argument("XPoly::compose: arity mismatch");
    Poly result;
    for (const auto& [alpha, c] : terms_) {
        Poly mono = Poly::constant(Rat(1));
        for (int j = 0; j < nvars_; ++j)
            for (long p = 0; p < alpha[static_cast<size_t>(j)]; ++p) mono = mono * branch_coords[static_cast<size_t>(j)];
        result = result + mono.scaled(c);
    }
    return result;
}

bool Branch::is_zero_map() const
{
    for (const auto& p : coord)
        if (!p.is_zero()) return false;
    return true;
}

bool Branch::is_monomial() const
{
    for (const auto& p : coord)
        if (!p.is_zero() && p.terms().size() != 1) return false;
    return true;
}

long Branch::min_order() const
{
    long m = LONG_MAX;
    for (const auto& p : coord)
        if (auto o = p.order()) m = std::min(m, *o);
    return m;
}

TruncSeries Parametrization::series(int branch, int j, int trunc) const
{
    return branches[static_cast<size_t>(branch)].coord[static_cast<size_t>(j)].truncate(trunc);
}

MultiSeries Parametrization::coordinate(int j, const std::vector<int>& trunc) const
{
    MultiSeries m;
    m.comp.reserve(branches.size());
    for (int i = 0; i < r(); ++i) m.comp.push_back(series(i, j, trunc[static_cast<size_t>(i)]));
    return m;
}

std::vector<MultiSeries> Parametrization::generators(const std::vector<int>& trunc) const
{
    std::vector<MultiSeries> g;
    g.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) g.push_back(coordinate(j, trunc));
    return g;
}

Poly Parametrization::coord_derivative(int branch, int j) const
{
    return branches[static_cast<size_t>(branch)].coord[static_cast<size_t>(j)].derivative();
}

bool Parametrization::operator==(const Parametrization& o) const
{
    if (n != o.n || branches.size() != o.branches.size()) return false;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].name != o.branches[i].name || branches[i].param != o.branches[i].param ||
            branches[i].coord != o.branches[i].coord)
            return false;
    }
    return true;
}

} // namespace germinv
