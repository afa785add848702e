#include "germinv/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace germinv {

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(long exp, Rat coeff)
{
    Poly p;
    if (!germinv::is_zero(coeff)) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

void Poly::add_term(long exp, const Rat& coeff)
{
    if (germinv::is_zero(coeff)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += coeff;
        if (germinv::is_zero(it->second)) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, coeff});
    }
}

std::optional<long> Poly::order() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const
{
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Poly Poly::mul_trunc(const Poly& o, long cut) const
{
    Poly r;
    for (const auto& [ea, ca] : terms_) {
        if (ea >= cut) break;
        for (const auto& [eb, cb] : o.terms_) {
            if (ea + eb >= cut) break;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

Poly Poly::derivative() const
{
    Poly r;
    for (const auto& [e, c] : terms_)
        if (e >= 1) r.terms_.emplace_back(e - 1, c * e);
    return r;
}

Poly Poly::scaled(const Rat& c) const
{
    Poly r;
    if (germinv::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, q] : terms_) r.terms_.emplace_back(e, q * c);
    return r;
}

Poly Poly::rescale_param(const Rat& lambda) const
{
    Poly r;
    r.terms_.reserve(terms_.size());
    Rat pw = 1;
    long at = 0;
    for (const auto& [e, q] : terms_) {
        while (at < e) {
            pw *= lambda;
            ++at;
        }
        r.add_term(e, q * pw);
    }
    return r;
}

TruncSeries Poly::truncate(int trunc_order) const
{
    TruncSeries s(trunc_order);
    for (const auto& [e, c] : terms_) {
        if (e >= trunc_order) break;
        s.set_coeff(static_cast<int>(e), c);
    }
    return s;
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(int trunc_order)
{
    if (trunc_order < 1) throw std::invalid_argument("trunc_order must be positive");
    c_.assign(static_cast<size_t>(trunc_order), Rat(0));
}

std::optional<int> TruncSeries::order() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!is_zero(c_[i])) return static_cast<int>(i);
    return std::nullopt;
}

TruncSeries TruncSeries::derivative() const
{
    assert(trunc_order() >= 2);
    TruncSeries r(trunc_order() - 1);
    for (int e = 1; e < trunc_order(); ++e) r.c_[static_cast<size_t>(e - 1)] = c_[static_cast<size_t>(e)] * e;
    return r;
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b)
{
    int n = std::min(a.trunc_order(), b.trunc_order());
    TruncSeries r(n);
    for (int i = 0; i < n; ++i) r.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b)
{
    int n = std::min(a.trunc_order(), b.trunc_order());
    TruncSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(a.c_[static_cast<size_t>(i)])) continue;
        for (int j = 0; i + j < n; ++j) {
            if (is_zero(b.c_[static_cast<size_t>(j)])) continue;
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

TruncSeries eval_monomial(const std::vector<TruncSeries>& series, const std::vector<long>& alpha)
{
    if (series.size() != alpha.size()) throw std::invalid_argument("eval_monomial: arity mismatch");
    int n = series.empty() ? 1 : series[0].trunc_order();
    for (const auto& s : series) n = std::min(n, s.trunc_order());
    TruncSeries acc(n);
    acc.set_coeff(0, Rat(1));
    for (size_t j = 0; j < series.size(); ++j)
        for (long k = 0; k < alpha[j]; ++k) acc = mul(acc, series[j]);
    return acc;
}

std::vector<std::optional<int>> MultiSeries::value_vector() const
{
    std::vector<std::optional<int>> v;
    v.reserve(comp.size());
    for (const auto& s : comp) v.push_back(s.order());
    return v;
}

bool MultiSeries::known_zero() const
{
    for (const auto& s : comp)
        if (!s.known_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- LaurentWindow

LaurentWindow::LaurentWindow(long low, int len) : low_(low)
{
    if (len < 0) throw std::invalid_argument("LaurentWindow: negative length");
    c_.assign(static_cast<size_t>(len), Rat(0));
}

LaurentWindow LaurentWindow::unit_vector(long low, int len, long exp)
{
    LaurentWindow w(low, len);
    w.set_coeff(exp, Rat(1));
    return w;
}

LaurentWindow LaurentWindow::mul_poly(const Poly& p, long cut) const
{
    auto ord = p.order();
    if (!ord) return LaurentWindow(cut, 0);
    long new_low = low_ + *ord;
    long len = cut - new_low;
    if (len < 0) len = 0;
    LaurentWindow r(new_low, static_cast<int>(len));
    for (long e = low_; e < high(); ++e) {
        const Rat& a = coeff(e);
        if (is_zero(a)) continue;
        for (const auto& [pe, pc] : p.terms()) {
            long target = e + pe;
            if (target >= cut) break;
            if (target < new_low) continue;
            r.set_coeff(target, r.coeff(target) + a * pc);
        }
    }
    return r;
}

} // namespace germinv
