#ifndef GERMINV_SERIES_HPP
#define GERMINV_SERIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "germinv/rational.hpp"

namespace germinv {

class TruncSeries;

// Exact univariate polynomial over Q, sparse, terms sorted by exponent.
// This is the input-side representation: instance files contain finite
// polynomials, which get embedded as truncated series at whatever window
// the current computation needs.
class Poly {
public:
    using Term = std::pair<long, Rat>; // (exponent, coefficient), coefficient != 0

    Poly() = default;
    static Poly monomial(long exp, Rat coeff);
    static Poly constant(Rat c) { return monomial(0, std::move(c)); }

    void add_term(long exp, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    // Least exponent with nonzero coefficient; nullopt for the zero polynomial.
    std::optional<long> order() const;
    long degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    const std::vector<Term>& terms() const { return terms_; }

    // True iff the polynomial is a single term c*t^e with e >= 1.
    bool is_single_monomial() const { return terms_.size() == 1 && terms_[0].first >= 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly derivative() const;
    // Product dropping every term with exponent >= cut.
    Poly mul_trunc(const Poly& o, long cut) const;
    Poly scaled(const Rat& c) const;
    // t -> lambda * t
    Poly rescale_param(const Rat& lambda) const;

    TruncSeries truncate(int trunc_order) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

// A univariate power series known exactly up to (but not including) exponent
// trunc_order.  Exponents >= trunc_order are unknown, not zero; every
// operation propagates the tightest valid truncation.
class TruncSeries {
public:
    explicit TruncSeries(int trunc_order);

    int trunc_order() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int exp) const { return c_[static_cast<size_t>(exp)]; }
    void set_coeff(int exp, const Rat& v) { c_[static_cast<size_t>(exp)] = v; }

    // Least exponent with nonzero coefficient; nullopt means ">= trunc_order".
    std::optional<int> order() const;
    bool known_zero() const { return !order().has_value(); }

    TruncSeries derivative() const; // trunc_order drops by one

    friend TruncSeries add(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_; // dense; index = exponent, size = trunc_order
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

// Product of powers prod_j series[j]^alpha[j], truncated at the common window.
// Preconditions are the caller's: used for monomials pushed through a
// parametrization, where every factor has order >= 1.
TruncSeries eval_monomial(const std::vector<TruncSeries>& series, const std::vector<long>& alpha);

// One element of a multigerm ring: r series, one per branch, each with its
// own truncation window.
struct MultiSeries {
    std::vector<TruncSeries> comp;

    int branches() const { return static_cast<int>(comp.size()); }
    // Per-branch orders; nullopt entries mean ">= trunc_order" on that branch.
    std::vector<std::optional<int>> value_vector() const;
    bool known_zero() const;
};

// A Laurent-series window: exponents low .. low+len-1, exact coefficients.
// Only the Cohen-Macaulay type computation needs negative exponents.
class LaurentWindow {
public:
    LaurentWindow(long low, int len);
    static LaurentWindow unit_vector(long low, int len, long exp); // t^exp in the window

    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()); } // one past the last stored exponent
    const Rat& coeff(long exp) const { return c_[static_cast<size_t>(exp - low_)]; }
    void set_coeff(long exp, const Rat& v) { c_[static_cast<size_t>(exp - low_)] = v; }

    // Multiply by a polynomial; low shifts additively by the polynomial's
    // order, and the window is cut at `cut` (exponents >= cut dropped).
    LaurentWindow mul_poly(const Poly& p, long cut) const;

private:
    long low_;
    std::vector<Rat> c_;
};

} // namespace germinv

#endif
