#ifndef GERMINV_JETLIN_HPP
#define GERMINV_JETLIN_HPP

#include <tuple>
#include <unordered_map>
#include <vector>

#include "germinv/parametrization.hpp"
#include "germinv/series.hpp"

namespace germinv {

// Coordinate system of a finite-dimensional jet space
//   sum over branches i, slots s:  exponent window [lo_i, hi_i).
// Slots are caller-defined (a coordinate direction d/dx_j, or the single
// scalar slot for ring elements).  A fixed bijection to flat 0-based indices
// is maintained: branch-major, then slot, then exponent offset.
struct JetLayout {
    struct Window {
        long lo = 0;
        long hi = 0;
    };
    int slots = 1;
    std::vector<Window> windows; // one per branch

    int branches() const { return static_cast<int>(windows.size()); }
    int dim() const;
    int index(int branch, int slot, long exp) const;
    std::tuple<int, int, long> coord(int flat) const; // (branch, slot, exp)

    bool operator==(const JetLayout& o) const;
};

// Jet vectors are sparse: (flat coordinate, coefficient), sorted by
// coordinate, all coefficients nonzero.
using JetVec = std::vector<std::pair<int, Rat>>;

// v -> v + c*w
JetVec jet_axpy(const JetVec& v, const Rat& c, const JetVec& w);

// Embed a multigerm element into one slot of the layout.
JetVec to_jet(const JetLayout& ly, int slot, const MultiSeries& m);
// Embed branchwise sparse polynomials (exponents below the window are an error).
JetVec to_jet(const JetLayout& ly, int slot, int branch, const Poly& p);

// Echelonized basis of a subspace: rows in reduced echelon form over Q with
// monic pivots, one pivot per row, canonical.  Single-writer; reads are safe
// concurrently.
class JetBasis {
public:
    enum class InsertResult { Extended, AlreadyInSpan };

    explicit JetBasis(JetLayout ly) : layout_(std::move(ly)) {}

    InsertResult insert(JetVec v);
    bool contains(const JetVec& v) const { return reduce(v).empty(); }
    JetVec reduce(JetVec v) const; // residual after elimination against all rows
    int dim() const { return static_cast<int>(rows_.size()); }
    const JetLayout& layout() const { return layout_; }
    const std::vector<JetVec>& rows() const { return rows_; }
    bool has_pivot(int coordinate) const { return pivot_row_.count(coordinate) != 0; }
    // Row index owning this pivot coordinate; -1 if none.
    int pivot_row(int coordinate) const;

    // Codimension of the span inside a coordinate sub-window.  Every row must
    // be supported inside `ambient`; otherwise the caller has to intersect
    // first and this throws.
    long codim(const std::vector<int>& ambient) const;

private:
    JetLayout layout_;
    std::vector<JetVec> rows_;
    std::unordered_map<int, int> pivot_row_;

    void check_coords(const JetVec& v) const;
};

// Echelon basis of the span of {1} and all monomials in the generators,
// inside the jet space with per-branch truncation trunc[i] (slots = 1).
// Worklist by total degree, then generator index; stops when no product
// extends the span.  Every generator must have per-branch order >= 1
// (zero components are allowed).
JetBasis saturate_algebra(const std::vector<MultiSeries>& generators, const std::vector<int>& trunc);

// Lowest b such that every coordinate (branch, slot, e), b <= e < hi, is a
// pivot whose row is that unit vector itself; hi when even hi-1 fails.
long pure_unit_tail(const JetBasis& basis, int branch, int slot, long hi);

// Reconstruct per-branch polynomials from a slot-0 row; valid ring
// representatives because the layout windows start at zero.
std::vector<Poly> lift_row(const JetLayout& ly, const JetVec& row);

} // namespace germinv

#endif
