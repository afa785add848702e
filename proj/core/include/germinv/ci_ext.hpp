#ifndef GERMINV_CI_EXT_HPP
#define GERMINV_CI_EXT_HPP

#include <string>
#include <vector>

#include "germinv/cotangent.hpp"
#include "germinv/invariants.hpp"
#include "germinv/subalgebra.hpp"

namespace germinv {

enum class IdealCheck { Ok, Mismatch, UnsupportedShape };

// f_i composed with every branch must vanish identically (checked exactly on
// polynomials, no truncation).  Computations downstream additionally need a
// complete intersection, k = n-1 (plane curves are the k = 1, n = 2 case).
IdealCheck verify_ideal(const Parametrization& phi, const IdealSpec& ideal, std::string* diag);

// The k x n matrix (df_i/dx_j) composed with phi, entries exact per branch.
// Construction verifies the chain rule sum_j entry(i,j) * phi_dot^(j) = 0.
struct JacobianAlongPhi {
    int k = 0;
    int n = 0;
    // entries[i][j][branch]
    std::vector<std::vector<std::vector<Poly>>> entries;

    JacobianAlongPhi(const Parametrization& phi, const IdealSpec& ideal);
};

struct TjurinaResult {
    CertStatus status = CertStatus::Undetermined;
    long tau = -1;
    int window = 0;
};

// tau = dim coker( O_X^n -> O_X^(n-1) given by the Jacobian ), on jets,
// certified once the image contains a full branchwise coefficient window
// with enough margin to push the containment into the ring.
TjurinaResult tjurina_ci(const Parametrization& phi, const IdealSpec& ideal, const SubalgebraResult& sub,
                         const Options& opts);

struct DstarModDims {
    long t1_xbar_setminus_x = -1; // kernel of d* on the (O_Xbar/O_X) target
    long t2_xbar_setminus_x = -1; // cokernel
    long rank = -1;               // rank of d* on that target
};

DstarModDims dstar_mod(const Parametrization& phi, const IdealSpec& ideal, const SubalgebraResult& sub);

struct DstarBarDims {
    bool kernel_rank1 = false; // chain-rule witness: the velocity generates the kernel
    long t2_xbar_over_x = -1;  // dim coker( d* on the O_Xbar target )
    CertStatus status = CertStatus::Undetermined;
};

DstarBarDims dstar_bar(const Parametrization& phi, const IdealSpec& ideal, const SubalgebraResult& sub,
                       const Options& opts);

struct CiDims {
    long tau = -1;
    long t1_xbar_setminus_x = -1;
    long t2_xbar_setminus_x = -1;
    long t1_xbar_to_x = -1;
    long t2_xbar_to_x = -1;
    long t2_xbar_over_x_direct = -1;
    long t2_xbar_over_x_formula = -1;
    long dstar_rank = -1;
};

struct BraidReport {
    CiDims dims;
    std::vector<CheckEntry> entries;
};

// The consistency identities tying the ideal-assisted dimensions to the
// parametric ones; every entry is a named pass/fail line.
BraidReport braid_consistency(const Parametrization& phi, const InvariantRecord& rec, const CotangentDims& cot,
                              const TjurinaResult& tjurina, const DstarModDims& mod_dims,
                              const DstarBarDims& bar_dims);

} // namespace germinv

#endif
