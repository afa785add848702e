#include "germinv/jetlin.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace germinv {

int JetLayout::dim() const
{
    long d = 0;
    for (const auto& w : windows) d += static_cast<long>(slots) * (w.hi - w.lo);
    return static_cast<int>(d);
}

int JetLayout::index(int branch, int slot, long exp) const
{
    long base = 0;
    for (int b = 0; b < branch; ++b) base += static_cast<long>(slots) * (windows[static_cast<size_t>(b)].hi - windows[static_cast<size_t>(b)].lo);
    const Window& w = windows[static_cast<size_t>(branch)];
    if (exp < w.lo || exp >= w.hi) throw std::out_of_range("JetLayout::index: exponent outside window");
    long len = w.hi - w.lo;
    return static_cast<int>(base + slot * len + (exp - w.lo));
}

std::tuple<int, int, long> JetLayout::coord(int flat) const
{
    long rest = flat;
    for (int b = 0; b < branches(); ++b) {
        const Window& w = windows[static_cast<size_t>(b)];
        long len = w.hi - w.lo;
        long block = static_cast<long>(slots) * len;
        if (rest < block) return {b, static_cast<int>(rest / len), w.lo + rest % len};
        rest -= block;
    }
    throw std::out_of_range("JetLayout::coord: flat index out of range");
}

bool JetLayout::operator==(const JetLayout& o) const
{
    if (slots != o.slots || windows.size() != o.windows.size()) return false;
    for (size_t i = 0; i < windows.size(); ++i)
        if (windows[i].lo != o.windows[i].lo || windows[i].hi != o.windows[i].hi) return false;
    return true;
}

JetVec jet_axpy(const JetVec& v, const Rat& c, const JetVec& w)
{
    JetVec r;
    r.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            r.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Rat q = c * w[j].second;
            if (!is_zero(q)) r.emplace_back(w[j].first, std::move(q));
            ++j;
        } else {
            Rat q = v[i].second + c * w[j].second;
            if (!is_zero(q)) r.emplace_back(v[i].first, std::move(q));
            ++i;
            ++j;
        }
    }
    return r;
}

JetVec to_jet(const JetLayout& ly, int slot, const MultiSeries& m)
{
    if (m.branches() != ly.branches()) throw std::invalid_argument("to_jet: branch count mismatch");
    JetVec v;
    for (int b = 0; b < ly.branches(); ++b) {
        const auto& w = ly.windows[static_cast<size_t>(b)];
        const TruncSeries& s = m.comp[static_cast<size_t>(b)];
        long hi = std::min<long>(w.hi, s.trunc_order());
        for (long e = std::max<long>(w.lo, 0); e < hi; ++e) {
            const Rat& c = s.coeff(static_cast<int>(e));
            if (!is_zero(c)) v.emplace_back(ly.index(b, slot, e), c);
        }
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

JetVec to_jet(const JetLayout& ly, int slot, int branch, const Poly& p)
{
    JetVec v;
    const auto& w = ly.windows[static_cast<size_t>(branch)];
    for (const auto& [e, c] : p.terms()) {
        if (e < w.lo) throw std::invalid_argument("to_jet: exponent below window");
        if (e >= w.hi) break;
        v.emplace_back(ly.index(branch, slot, e), c);
    }
    return v;
}

void JetBasis::check_coords(const JetVec& v) const
{
    int d = layout_.dim();
    for (const auto& [c, q] : v)
        if (c < 0 || c >= d) throw std::invalid_argument("jet vector: coordinate outside basis coordinate system");
}

JetVec JetBasis::reduce(JetVec v) const
{
    check_coords(v);
    size_t i = 0;
    while (i < v.size()) {
        auto it = pivot_row_.find(v[i].first);
        if (it == pivot_row_.end()) {
            ++i;
            continue;
        }
        // rows are monic at their pivot
        v = jet_axpy(v, -v[i].second, rows_[static_cast<size_t>(it->second)]);
        // coordinates < the eliminated one are untouched; rescan from i
    }
    return v;
}

JetBasis::InsertResult JetBasis::insert(JetVec v)
{
    v = reduce(std::move(v));
    if (v.empty()) return InsertResult::AlreadyInSpan;
    // normalize to a monic pivot
    Rat inv = 1 / v.front().second;
    if (!is_zero(inv - 1))
        for (auto& [c, q] : v) q *= inv;
    int pivot = v.front().first;
    // back-substitute into existing rows to keep the form reduced
    for (auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                   [](const auto& t, int p) { return t.first < p; });
        if (it != row.end() && it->first == pivot) row = jet_axpy(row, -it->second, v);
    }
    pivot_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return InsertResult::Extended;
}

int JetBasis::pivot_row(int coordinate) const
{
    auto it = pivot_row_.find(coordinate);
    return it == pivot_row_.end() ? -1 : it->second;
}

long JetBasis::codim(const std::vector<int>& ambient) const
{
    std::vector<char> in(static_cast<size_t>(layout_.dim()), 0);
    for (int c : ambient) {
        if (c < 0 || c >= layout_.dim()) throw std::invalid_argument("codim: ambient coordinate out of range");
        in[static_cast<size_t>(c)] = 1;
    }
    for (const auto& row : rows_)
        for (const auto& [c, q] : row)
            if (!in[static_cast<size_t>(c)]) throw std::invalid_argument("codim: row supported outside ambient");
    return static_cast<long>(ambient.size()) - dim();
}

long pure_unit_tail(const JetBasis& basis, int branch, int slot, long hi)
{
    const JetLayout& ly = basis.layout();
    long b = hi;
    for (long m = hi - 1; m >= ly.windows[static_cast<size_t>(branch)].lo; --m) {
        int row = basis.pivot_row(ly.index(branch, slot, m));
        if (row < 0) break;
        if (basis.rows()[static_cast<size_t>(row)].size() != 1) break;
        b = m;
    }
    return b;
}

std::vector<Poly> lift_row(const JetLayout& ly, const JetVec& row)
{
    std::vector<Poly> lift(static_cast<size_t>(ly.branches()));
    for (const auto& [c, q] : row) {
        auto [b, s, e] = ly.coord(c);
        if (s != 0) throw std::invalid_argument("lift_row: row uses a non-scalar slot");
        lift[static_cast<size_t>(b)].add_term(e, q);
    }
    return lift;
}

JetBasis saturate_algebra(const std::vector<MultiSeries>& generators, const std::vector<int>& trunc)
{
    int r = static_cast<int>(trunc.size());
    JetLayout ly;
    ly.slots = 1;
    for (int i = 0; i < r; ++i) ly.windows.push_back({0, trunc[static_cast<size_t>(i)]});

    // generators as per-branch sparse polynomials; orders must be >= 1
    std::vector<std::vector<Poly>> gens;
    for (const auto& g : generators) {
        if (g.branches() != r) throw std::invalid_argument("saturate_algebra: generator branch count mismatch");
        std::vector<Poly> gp(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            const TruncSeries& s = g.comp[static_cast<size_t>(i)];
            auto o = s.order();
            if (o && *o == 0) throw std::invalid_argument("saturate_algebra: generator with zero-order component");
            for (int e = 0; e < s.trunc_order() && e < trunc[static_cast<size_t>(i)]; ++e)
                if (!is_zero(s.coeff(e))) gp[static_cast<size_t>(i)].add_term(e, s.coeff(e));
        }
        gens.push_back(std::move(gp));
    }

    JetBasis basis(ly);
    auto jet_of = [&](const std::vector<Poly>& rep) {
        JetVec v;
        for (int i = 0; i < r; ++i) {
            JetVec part = to_jet(ly, 0, i, rep[static_cast<size_t>(i)]);
            for (auto& t : part) v.push_back(std::move(t));
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };

    // worklist of monomials in the generators, by total degree then
    // generator index; only extending products are enqueued
    std::deque<std::vector<Poly>> queue;
    std::vector<Poly> one(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) one[static_cast<size_t>(i)] = Poly::constant(Rat(1));
    basis.insert(jet_of(one));
    queue.push_back(std::move(one));

    while (!queue.empty()) {
        std::vector<Poly> rep = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<Poly> prod(static_cast<size_t>(r));
            bool any = false;
            for (int i = 0; i < r; ++i) {
                prod[static_cast<size_t>(i)] =
                    rep[static_cast<size_t>(i)].mul_trunc(g[static_cast<size_t>(i)], trunc[static_cast<size_t>(i)]);
                any = any || !prod[static_cast<size_t>(i)].is_zero();
            }
            if (!any) continue;
            if (basis.insert(jet_of(prod)) == JetBasis::InsertResult::Extended) queue.push_back(std::move(prod));
        }
    }
    return basis;
}

} // namespace germinv
