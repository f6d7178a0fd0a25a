// SPDX-License-Identifier: Apache-2.0
#include <ostream>

#include <fmt/format.h>

#include "swipt/cli.hpp"
#include "swipt/verification.hpp"

namespace swipt::cli {

int run_selftest(std::ostream& out, const SelftestScale& scale)
{
    OracleConfig oracle;
    oracle.grid_steps = 120;
    oracle.refine_steps = 30;

    const std::vector<CheckResult> results = {
        check_oracle_equivalence(scale.oracle_instances, scale.seed, oracle),
        check_kkt_residuals(scale.kkt_instances, scale.seed + 1),
        check_feasibility_boundary(scale.boundary_instances, scale.seed + 2),
        check_single_eh_dominance(scale.split_instances, 20, scale.seed + 3),
        check_approx_tightness(scale.approx_instances, scale.seed + 4, 0.5),
        check_kkt_detects_mutation(),
        check_sweep_determinism(24, scale.seed + 5, {1, 3}),
    };
    int failed = 0;
    for (const auto& r : results) {
        out << fmt::format("{} {} ({} instances, {} failures) {}\n", r.passed ? "PASS" : "FAIL", r.name, r.instances,
                           r.failures, r.detail);
        failed += r.passed ? 0 : 1;
    }
    out << (failed == 0 ? "selftest: all checks passed\n" : fmt::format("selftest: {} check(s) failed\n", failed));
    return failed;
}

} // namespace swipt::cli
