#ifndef GERMINV_INVARIANTS_HPP
#define GERMINV_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace germinv {

enum class CertStatus { Certified, Stabilized, Undetermined, NotApplicable };

const char* to_string(CertStatus s);

// Realized vanishing orders of one branch algebra.
struct ValueSemigroup {
    int branch = 0;
    std::vector<long> elements; // realized orders in [0, conductor), sorted
    long conductor = 0;         // least g with g + N contained in the semigroup
    long gcd = 1;

    long gaps() const { return conductor - static_cast<long>(elements.size()); }
};

// Branchwise conductor exponents of the subalgebra O_X inside its
// normalization: t_i^{c_i} C{t_i} is the largest ideal landing in O_X.
struct ConductorData {
    std::vector<long> per_branch;

    long degree() const
    {
        long c = 0;
        for (long ci : per_branch) c += ci;
        return c;
    }
};

// One named verification: a theorem identity or inequality checked on
// computed values.
struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct InvariantRecord {
    int r = 0;
    int n = 0;
    long mt = 0;
    std::vector<long> mt_branch;
    long delta = -1;
    long mu = -1;               // 2*delta - r + 1
    long conductor_degree = -1; // c
    long m1 = -1;
    long deligne_e = -1;        // 3*delta - m1
    bool gorenstein = false;
    std::optional<long> cm_t; // Cohen-Macaulay type; empty for smooth germs
    std::vector<ValueSemigroup> semigroups;
    std::vector<long> delta_branch;
    ConductorData conductor;
    std::optional<long> tjurina;
    std::string tjurina_method;
    bool quasihomogeneous = false;

    CertStatus status_delta = CertStatus::Undetermined;
    CertStatus status_m1 = CertStatus::Undetermined;
    CertStatus status_tjurina = CertStatus::NotApplicable;
};

enum class Classification { Smooth, OrdinaryNode, SingularFinite, NotFinitelyDetermined, Undetermined };

const char* to_string(Classification c);

} // namespace germinv

#endif
