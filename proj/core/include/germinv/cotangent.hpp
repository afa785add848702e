#ifndef GERMINV_COTANGENT_HPP
#define GERMINV_COTANGENT_HPP

#include <vector>

#include "germinv/invariants.hpp"
#include "germinv/jetlin.hpp"
#include "germinv/subalgebra.hpp"

namespace germinv {

// Jet realization of the extended tangent space of the parametrization:
// ambient = (n slots) x (branch windows), T_image spans the branchwise
// multiples of the velocity vector, W_image the algebra copies per slot.
struct TangentSpaceJets {
    JetLayout ambient;
    JetBasis span; // T_image + W_image combined

    TangentSpaceJets() : span(JetLayout{}) {}
};

struct CotangentDims {
    long ae_codim_oracle = -1;
    long ae_codim_formula = -1;  // n*delta - m1, equal to (n-3)*delta + e
    long le_codim = -1;          // n*delta
    long m1 = -1;
    long t1_par = -1;            // dim T1 of the parametrization functor = ae_codim
    long t1_xbar_setminus_y = -1; // n*delta
    long t1_xbar_over_x = -1;     // mt - r
    long base_dim = -1;           // dimension of the semi-universal base = n*delta - m1
    long deligne_e = -1;          // 3*delta - m1
};

// Direct quotient: codim of t-phi(theta) + omega-phi(theta) in the jet
// window W_i = c_i + max_j ord(phi_i^(j)') + 2 (+ window_bump for the
// truncation-independence property).  Exact: the conductor absorbs the
// quotient above the window.
long ae_codim_oracle(const Parametrization& phi, const SubalgebraResult& sub, int window_bump = 0);

// Codim of the omega-image alone; the theorem forces this to equal n*delta,
// and a mismatch throws (it would mean an internal bug, not bad input).
long le_codim(const Parametrization& phi, const SubalgebraResult& sub);

// m1 = dim T0 of the normalization modulo liftable vector fields, solved as
// a membership system on the conductor window.
long m1_codim(const Parametrization& phi, const SubalgebraResult& sub);

// dim T1 of X-bar over X = mt - r, from the explicit branchwise quotient.
long t1_xbar_over_x_dim(const Parametrization& phi);

struct CotangentAssembly {
    CotangentDims dims;
    std::vector<CheckEntry> checks; // formula identity + inequality chain
    bool chain_applicable = false;
};

// Fills the dimension table, cross-checks oracle vs formula, and verifies
// the inequality chain on singular input (the type-dependent links only when
// t is available).
CotangentAssembly assemble_cotangent(const Parametrization& phi, const SubalgebraResult& sub,
                                     const InvariantRecord& rec);

} // namespace germinv

#endif
