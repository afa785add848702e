#ifndef GERMINV_PARAMETRIZATION_HPP
#define GERMINV_PARAMETRIZATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germinv/series.hpp"

namespace germinv {

// Polynomial in x_1..x_n with exact rational coefficients: a finite map
// from exponent vectors to scalars.
class XPoly {
public:
    using Exponents = std::vector<long>;

    explicit XPoly(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    void add_term(const Exponents& alpha, const Rat& coeff);
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;
    long total_degree() const;

    XPoly partial(int var) const; // d/dx_var
    XPoly operator*(const XPoly& o) const;
    XPoly operator+(const XPoly& o) const;
    XPoly scaled(const Rat& c) const;

    // Substitute x_j := sum_m M[j][m] * x_m (an invertible linear change of
    // coordinates in tests); M is nvars x nvars.
    XPoly substitute_linear(const std::vector<std::vector<Rat>>& M) const;

    // Exact composition with one branch: f(phi_i^(1)(t), ..., phi_i^(n)(t)).
    Poly compose(const std::vector<Poly>& branch_coords) const;

    bool operator==(const XPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    int nvars_;
    std::map<Exponents, Rat> terms_;
};

// One branch of the multigerm: n coordinate polynomials in the branch's own
// parameter, all with zero constant term.
struct Branch {
    std::string name;
    std::string param;
    std::vector<Poly> coord; // size n

    bool is_zero_map() const;
    bool is_monomial() const; // every coordinate a single monomial or zero
    long min_order() const;   // mt_i = min_j ord(coord[j]); LONG_MAX-free: requires !is_zero_map()
};

// The multigerm phi = (phi_i^(j)): r branches, n coordinates.
struct Parametrization {
    int n = 0;
    std::vector<Branch> branches;

    int r() const { return static_cast<int>(branches.size()); }

    // phi_i^(j) embedded at the given truncation window.
    TruncSeries series(int branch, int j, int trunc) const;
    // phi^(j) across all branches, per-branch windows.
    MultiSeries coordinate(int j, const std::vector<int>& trunc) const;
    // All n coordinates as multigerm elements (the generators of the image algebra).
    std::vector<MultiSeries> generators(const std::vector<int>& trunc) const;
    // d/dt_i of phi_i^(j), exact.
    Poly coord_derivative(int branch, int j) const;

    bool operator==(const Parametrization& o) const;
};

struct IdealSpec {
    std::vector<std::pair<std::string, XPoly>> gens; // (name, polynomial)

    int k() const { return static_cast<int>(gens.size()); }
    bool operator==(const IdealSpec& o) const { return gens == o.gens; }
};

enum class ReportFormat { Table, Json };

struct Options {
    int trunc_start = 0;  // 0 = automatic: max(8, 4*mt)
    int trunc_max = 512;
    bool quasihomogeneous = false; // input assertion; auto-set for pure monomial input
    ReportFormat format = ReportFormat::Table;
};

struct ProblemInstance {
    Parametrization phi;
    std::optional<IdealSpec> ideal;
    Options options;
};

// Documented input limits.
inline constexpr long kMaxExponent = 1000000;

} // namespace germinv

#endif
