#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

/// Identifiers of the cross-module checks run per configuration.  A failure
/// message is prefixed by its identifier.
///
///   clique_oracle        signature enumeration equals Bron-Kerbosch; sizes n
///   linear_quotients     colon-ideal oracle linear; omega <= n-1 (both orders)
///   regularity_formula   max omega = floor(n - n/d') and top counts agree
///   counting_formulas    t/G/H formulas equal the direct counts
///   newton_dual          multiplicity, regularity, t invariant under the dual
///   bound_sandwich       lower <= multiplicity <= upper
///   peak_dichotomy       max omega = n-1 iff the arithmetic criterion holds
///   aux                  remaining structural laws (rank edges, class sizes,
///                        roots, sorting laws, ...)
struct ConfigCheckResult {
    Config config;
    long long t = 0;
    long long mult = 0;
    int reg = 0;
    int max_omega = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Runs the full invariant suite on one configuration.
ConfigCheckResult check_config(const Config& config);

/// All valid configurations with 3 <= n <= max_n, d <= max_d, and point count
/// at most max_t, in (n, d, alpha) lex order.
std::vector<Config> sweep_family(int max_n, int max_d, long long max_t);

struct SweepOptions {
    int max_n = 5;
    int max_d = 8;
    long long max_t = 400;
    int sample = 0;          // 0 = exhaustive; otherwise sample this many configs
    std::uint64_t seed = 0;  // for sampling
};

struct SweepSummary {
    long long configs = 0;
    long long failed_configs = 0;
    std::vector<ConfigCheckResult> results;
    std::map<std::string, long long> failure_counts;  // by check identifier

    bool ok() const { return failed_configs == 0; }
};

SweepSummary run_sweep(const SweepOptions& options);

}  // namespace veronese
