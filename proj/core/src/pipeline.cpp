#include "germinv/pipeline.hpp"

#include <algorithm>

namespace germinv {

namespace {

// Exact imprimitivity certificate: a monomial branch whose coordinate orders
// share a factor k > 1 genuinely factors through s -> s^k.  For non-monomial
// input a persistent gcd > 1 is only a suspicion (cancellations can realize
// new orders above any finite truncation), so it ends as "undetermined".
std::optional<std::pair<int, long>> monomial_imprimitive_branch(const Parametrization& phi)
{
    for (int i = 0; i < phi.r(); ++i) {
        const Branch& br = phi.branches[static_cast<size_t>(i)];
        if (!br.is_monomial() || br.is_zero_map()) continue;
        long k = 0;
        for (const auto& p : br.coord)
            if (auto o = p.order()) k = gcd_long(k, *o);
        if (k > 1) return std::make_pair(i, k);
    }
    return std::nullopt;
}

// Pure monomial input is quasihomogeneous iff one positive weight vector fits
// every branch: on the support of branch i the weights must be proportional
// to its exponent vector.  Ratio constraints are merged with a union-find
// that tracks w_j / w_root.
struct RatioUnionFind {
    std::vector<int> parent;
    std::vector<Rat> ratio; // w_node / w_parent

    explicit RatioUnionFind(int n) : parent(static_cast<size_t>(n)), ratio(static_cast<size_t>(n), Rat(1))
    {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }

    std::pair<int, Rat> find(int x)
    {
        if (parent[static_cast<size_t>(x)] == x) return {x, Rat(1)};
        auto [root, r] = find(parent[static_cast<size_t>(x)]);
        parent[static_cast<size_t>(x)] = root;
        ratio[static_cast<size_t>(x)] *= r;
        return {root, ratio[static_cast<size_t>(x)]};
    }

    // enforce w_a / w_b = q; false on contradiction
    bool merge(int a, int b, const Rat& q)
    {
        auto [ra, qa] = find(a); // w_a = qa * w_ra
        auto [rb, qb] = find(b);
        if (ra == rb) return qa == q * qb;
        parent[static_cast<size_t>(ra)] = rb;
        ratio[static_cast<size_t>(ra)] = q * qb / qa;
        return true;
    }
};

bool monomial_quasihomogeneous(const Parametrization& phi)
{
    for (const auto& br : phi.branches)
        if (!br.is_monomial()) return false;

    RatioUnionFind uf(phi.n);
    for (const auto& br : phi.branches) {
        int anchor = -1;
        long anchor_exp = 0;
        for (int j = 0; j < phi.n; ++j) {
            auto o = br.coord[static_cast<size_t>(j)].order();
            if (!o) continue;
            if (anchor < 0) {
                anchor = j;
                anchor_exp = *o;
                continue;
            }
            Rat q(*o, anchor_exp); // w_j / w_anchor
            q.canonicalize();
            if (!uf.merge(j, anchor, q)) return false;
        }
    }
    return true;
}

void classify(RunOutcome& out, const Parametrization& phi)
{
    const InvariantRecord& rec = out.record;
    if (rec.delta == 0 && phi.r() == 1)
        out.classification = Classification::Smooth;
    else if (rec.delta == 1 && rec.r == 2 && rec.mt == 2)
        out.classification = Classification::OrdinaryNode;
    else
        out.classification = Classification::SingularFinite;
}

} // namespace

RunOutcome run(const ProblemInstance& instance, RunLevel level)
{
    RunOutcome out;
    const Parametrization& phi = instance.phi;
    Options opts = instance.options;

    out.record.n = phi.n;
    out.record.r = phi.r();

    // quasihomogeneity is an input assertion, auto-set for weight-consistent
    // pure monomial input
    out.record.quasihomogeneous = opts.quasihomogeneous || monomial_quasihomogeneous(phi);

    FinitenessCheck fin = check_finite(phi);
    if (!fin.finite) {
        out.classification = Classification::NotFinitelyDetermined;
        out.rejection_reason = fin.reason;
        out.exit_code = kExitNotFinite;
        return out;
    }

    Multiplicity mult = multiplicity(phi);
    out.record.mt = mult.mt;
    out.record.mt_branch = mult.per_branch;

    if (auto imp = monomial_imprimitive_branch(phi)) {
        out.classification = Classification::NotFinitelyDetermined;
        out.rejection_reason = "imprimitive branch " + phi.branches[static_cast<size_t>(imp->first)].name +
                               ", k=" + std::to_string(imp->second);
        out.exit_code = kExitNotFinite;
        return out;
    }

    if (level == RunLevel::Check) {
        // finiteness and branch primitivity only; no conductor search
        int start = opts.trunc_start > 0 ? opts.trunc_start : static_cast<int>(std::max<long>(8, 4 * mult.mt));
        int cap = std::max(opts.trunc_max, start);
        for (int N = start;; N = std::min(2 * N, cap)) {
            bool all_one = true;
            long worst = 1;
            int worst_branch = -1;
            for (int i = 0; i < phi.r(); ++i) {
                PrimitivityResult p = primitivity_degree(phi, i, N);
                if (p.k != 1) {
                    all_one = false;
                    if (p.k > worst) {
                        worst = p.k;
                        worst_branch = i;
                    }
                }
            }
            if (all_one) {
                // finiteness and branch primitivity verified; the singular
                // type and pairwise distinctness of branch images are only
                // decided by the full invariant run
                out.classification = Classification::Undetermined;
                out.diagnostics.push_back("finite, and every branch is primitive (realized orders reached gcd 1)");
                out.exit_code = kExitOk;
                return out;
            }
            if (N == cap) {
                out.classification = Classification::Undetermined;
                out.rejection_reason = "branch " + phi.branches[static_cast<size_t>(worst_branch)].name +
                                       ": realized orders keep gcd " + std::to_string(worst) +
                                       " up to truncation " + std::to_string(cap);
                out.exit_code = kExitUndetermined;
                return out;
            }
        }
    }

    SubalgebraResult sub = delta_and_conductor(phi, opts);
    if (sub.status != CertStatus::Certified) {
        out.classification = Classification::Undetermined;
        out.rejection_reason = sub.failure;
        out.record.semigroups = sub.semigroups;
        out.exit_code = kExitUndetermined;
        for (const auto& s : sub.semigroups)
            if (s.gcd != 1)
                out.diagnostics.push_back("branch " + phi.branches[static_cast<size_t>(s.branch)].name +
                                          ": realized orders have gcd " + std::to_string(s.gcd) +
                                          " up to truncation " + std::to_string(sub.trunc) +
                                          " (imprimitivity suspected but not certified for non-monomial input)");
        return out;
    }

    InvariantRecord& rec = out.record;
    rec.delta = sub.delta;
    rec.conductor = sub.cond;
    rec.conductor_degree = sub.cond.degree();
    rec.mu = 2 * rec.delta - rec.r + 1;
    rec.semigroups = sub.semigroups;
    rec.delta_branch = sub.delta_branch;
    rec.gorenstein = gorenstein_test(rec.delta, rec.conductor_degree);
    rec.cm_t = cm_type(phi, sub);
    rec.status_delta = CertStatus::Certified;

    rec.m1 = m1_codim(phi, sub);
    rec.deligne_e = 3 * rec.delta - rec.m1;
    rec.status_m1 = CertStatus::Certified;

    classify(out, phi);

    // value-semigroup sanity: certified branches are primitive
    for (const auto& s : rec.semigroups)
        if (s.gcd != 1) {
            out.checks.push_back({"branch semigroup gcd = 1", false, "branch " + std::to_string(s.branch)});
            out.exit_code = kExitCheckFailed;
        }

    // glue bound: delta >= sum of branch deltas + (r-1)
    if (rec.r > 1) {
        long sum = 0;
        for (long db : rec.delta_branch) sum += db;
        out.checks.push_back({"multibranch glue: delta >= sum delta_i + (r-1)", rec.delta >= sum + rec.r - 1,
                              std::to_string(rec.delta) + " vs " + std::to_string(sum + rec.r - 1)});
    }

    if (level == RunLevel::Invariants) {
        for (const auto& e : out.checks)
            if (!e.pass) out.exit_code = kExitCheckFailed;
        return out;
    }

    CotangentAssembly cot = assemble_cotangent(phi, sub, rec);
    out.cotangent = cot.dims;
    out.chain_applicable = cot.chain_applicable;
    for (auto& e : cot.checks) out.checks.push_back(std::move(e));

    const long de = cot.dims.ae_codim_oracle;
    const long n = phi.n;
    const long delta = rec.delta;

    // d_e = 0 exactly for smooth germs and the plane ordinary node; a node
    // embedded in n >= 3 has d_e = tau = 1 > 0
    bool degenerate = out.classification == Classification::Smooth ||
                      (out.classification == Classification::OrdinaryNode && n == 2);
    out.checks.push_back({"ae-codim = 0 iff smooth or plane ordinary node", (de == 0) == degenerate,
                          "ae-codim " + std::to_string(de) + ", " + to_string(out.classification)});

    if (rec.gorenstein && rec.delta > 0) {
        out.checks.push_back({"Gorenstein bound: ae-codim <= (n-1)*delta - r + 1",
                              de <= (n - 1) * delta - rec.r + 1,
                              std::to_string(de) + " vs " + std::to_string((n - 1) * delta - rec.r + 1)});
        if (rec.quasihomogeneous)
            out.checks.push_back({"Gorenstein quasihomogeneous: ae-codim = (n-1)*delta - r + 1",
                                  de == (n - 1) * delta - rec.r + 1,
                                  std::to_string(de) + " vs " + std::to_string((n - 1) * delta - rec.r + 1)});
    }
    if (rec.quasihomogeneous && rec.cm_t) {
        long t = *rec.cm_t;
        out.checks.push_back({"quasihomogeneous: ae-codim = (n-1)*delta - r + t",
                              de == (n - 1) * delta - rec.r + t,
                              std::to_string(de) + " vs " + std::to_string((n - 1) * delta - rec.r + t)});
    }
    // Gorenstein iff Cohen-Macaulay type 1 (on singular certified input)
    if (rec.cm_t)
        out.checks.push_back({"Gorenstein iff cm-type = 1", rec.gorenstein == (*rec.cm_t == 1),
                              std::string(rec.gorenstein ? "gorenstein" : "not gorenstein") + ", t=" +
                                  std::to_string(*rec.cm_t)});

    // tau without an ideal: the substitution tau = e for the smoothable,
    // unobstructed classes
    if (n <= 3 || (n == 4 && rec.gorenstein)) {
        rec.tjurina = rec.deligne_e;
        rec.tjurina_method = "deligne substitution (n<=3 or Gorenstein n=4)";
        rec.status_tjurina = CertStatus::Certified;
    }

    bool ran_ideal = false;
    if (level == RunLevel::Verify && instance.ideal) {
        std::string diag;
        IdealCheck chk = verify_ideal(phi, *instance.ideal, &diag);
        if (chk == IdealCheck::Mismatch) {
            out.diagnostics.push_back("ideal rejected: " + diag);
            out.exit_code = kExitUsage;
            return out;
        }
        if (chk == IdealCheck::UnsupportedShape) {
            out.diagnostics.push_back("ideal ignored: " + diag);
        } else {
            ran_ideal = true;
            TjurinaResult tj = tjurina_ci(phi, *instance.ideal, sub, opts);
            if (tj.status != CertStatus::Certified) {
                out.diagnostics.push_back("tjurina computation did not stabilize below the ceiling");
                out.exit_code = kExitUndetermined;
                return out;
            }
            if (rec.tjurina && *rec.tjurina != tj.tau) {
                out.checks.push_back({"tau from ideal = tau from deligne substitution", false,
                                      std::to_string(tj.tau) + " vs " + std::to_string(*rec.tjurina)});
            }
            rec.tjurina = tj.tau;
            rec.tjurina_method = "jacobian quotient (ideal)";
            rec.status_tjurina = CertStatus::Certified;

            DstarModDims md = dstar_mod(phi, *instance.ideal, sub);
            DstarBarDims bd = dstar_bar(phi, *instance.ideal, sub, opts);
            out.braid = braid_consistency(phi, rec, cot.dims, tj, md, bd);
            for (const auto& e : out.braid->entries) out.checks.push_back(e);
        }
    }
    (void)ran_ideal;

    for (const auto& e : out.checks)
        if (!e.pass) out.exit_code = kExitCheckFailed;
    return out;
}

} // namespace germinv
