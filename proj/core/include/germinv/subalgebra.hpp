#ifndef GERMINV_SUBALGEBRA_HPP
#define GERMINV_SUBALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "germinv/invariants.hpp"
#include "germinv/jetlin.hpp"
#include "germinv/parametrization.hpp"

namespace germinv {

struct FinitenessCheck {
    bool finite = true;
    int branch = -1;
    std::string reason;
};

// A branch must not be the zero map, else the codimension is infinite.
FinitenessCheck check_finite(const Parametrization& phi);

struct PrimitivityResult {
    long k = 1;
    // k is exact when the branch is monomial (orders cannot cancel) or when
    // the realized gcd already reached 1; otherwise a gcd > 1 observed at a
    // finite truncation may still drop at a higher one.
    bool exact = false;
};

// gcd of all realized orders of the branch subalgebra at the given truncation.
PrimitivityResult primitivity_degree(const Parametrization& phi, int branch, int trunc);

struct SubalgebraResult {
    CertStatus status = CertStatus::Undetermined;
    long delta = -1;
    ConductorData cond;
    std::vector<ValueSemigroup> semigroups;
    std::vector<long> delta_branch;
    int trunc = 0;         // truncation at which certification succeeded
    JetBasis algebra;      // image of the algebra mod t^trunc
    JetBasis window_basis; // projection of the algebra below the conductor exponents
    std::string failure;   // set when status != Certified

    SubalgebraResult() : algebra(JetLayout{}), window_basis(JetLayout{}) {}
};

// Runs the saturation at doubling truncations until the conductor window is
// certified: every pure jet t_i^m e_i with c_i <= m < N lies in the span,
// the span is closed under multiplication by the generators on that window,
// and N >= 2*c_i + 2 so that the containment lifts from jets to the actual
// ring.  delta is then exact.
SubalgebraResult delta_and_conductor(const Parametrization& phi, const Options& opts);

struct Multiplicity {
    long mt = 0;
    std::vector<long> per_branch;
};

Multiplicity multiplicity(const Parametrization& phi);

// Classical criterion: the local ring is Gorenstein iff c = 2*delta.
inline bool gorenstein_test(long delta, long conductor_degree)
{
    return conductor_degree == 2 * delta;
}

// Cohen-Macaulay type t = dim (O_X : m)/O_X, solved as a linear membership
// system on a Laurent window with branchwise exponents >= -mt_i.  Returns
// nullopt for a smooth germ.
std::optional<long> cm_type(const Parametrization& phi, const SubalgebraResult& sub);

// Shared helper: dimension of the solution space
//   { h supported on branch windows [lo_i, c_i) :
//        for every multiplier m_j, the window part of h*m_j lies in the
//        projected algebra }
// multipliers[j][branch] are exact polynomials.
long constrained_kernel_dim(const SubalgebraResult& sub,
                            const std::vector<std::vector<Poly>>& multipliers,
                            const std::vector<long>& lo);

} // namespace germinv

#endif
