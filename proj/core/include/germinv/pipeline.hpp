#ifndef GERMINV_PIPELINE_HPP
#define GERMINV_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "germinv/ci_ext.hpp"
#include "germinv/cotangent.hpp"
#include "germinv/invariants.hpp"
#include "germinv/parametrization.hpp"
#include "germinv/subalgebra.hpp"

namespace germinv {

// How far to drive the pipeline.
enum class RunLevel { Check, Invariants, Codim, Verify };

// Exit-code contract:
//   0 certified and every checked identity passed
//   1 usage / parse / bad input (set by callers for input-level failures)
//   2 not finitely determined
//   3 undetermined at the truncation ceiling
//   4 a theorem check failed
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotFinite = 2;
inline constexpr int kExitUndetermined = 3;
inline constexpr int kExitCheckFailed = 4;

struct RunOutcome {
    Classification classification = Classification::Undetermined;
    InvariantRecord record;
    std::optional<CotangentDims> cotangent;
    std::vector<CheckEntry> checks; // formula identities, chain, corollaries
    bool chain_applicable = false;
    std::optional<BraidReport> braid;
    std::vector<std::string> diagnostics;
    int exit_code = kExitOk;
    std::string rejection_reason; // set when classification rejects the input
};

RunOutcome run(const ProblemInstance& instance, RunLevel level);

} // namespace germinv

#endif
