// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 3-9 share a single exhaustive sweep over all valid
// configurations with n in {3,4,5}, d <= 8, and at most 400 points.
//
// Criteria 5, 8 and 9 are implemented exactly as stated and are expected to
// fail on a characterized subset: the closed form floor(n - n/d') exceeds the
// verified projective dimension by one precisely when alpha_1 = 1 and
// d' >= n.  The suite cross-tabulates every such failure against that
// predicate, so a failure outside the characterized set still signals an
// implementation bug.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "veronese/checks.hpp"
#include "veronese/cliques.hpp"
#include "veronese/invariants.hpp"
#include "veronese/order.hpp"

using namespace veronese;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

template <typename T>
bool expect(std::vector<std::string>& log, const std::string& what, const T& got,
            const T& want) {
    if (got == want) return true;
    log.push_back(what + " (got " + std::to_string(got) + ", want " + std::to_string(want) +
                  ")");
    return false;
}

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> log;
    bool ok = true;
    try {
        const Config cfg(5, 7, {1, 4, 4, 5, 7});
        const InvariantReport rep = make_invariant_report(cfg);
        ok &= expect(log, "t", rep.t, 171LL);
        ok &= expect(log, "G", rep.G, 75LL);
        ok &= expect(log, "H", rep.H, 18LL);
        ok &= expect(log, "reg", rep.reg, 4);
        ok &= expect(log, "a-invariant", rep.a_inv, -1);
        ok &= expect(log, "multiplicity", rep.mult, 960LL);
        if (!rep.bounds) {
            ok = false;
            log.push_back("bounds missing");
        } else {
            if (rep.bounds->lower != 170) {
                ok = false;
                log.push_back("lower bound != 170");
            }
            if (rep.bounds->upper != 1116) {
                ok = false;
                log.push_back("upper bound != 1116");
            }
            if (rep.bounds->binomial_term != 33571342) {
                ok = false;
                log.push_back("binomial term != 33571342");
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        log.push_back(e.what());
    }
    const double elapsed = seconds_since(start);
    if (elapsed > 5.0) {
        ok = false;
        log.push_back("runtime budget of 5 s exceeded");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.2fs", log.empty() ? "" : "; ", elapsed);
    report(1, "final-example reproduction (t, G, H, reg, a, e, bounds)", ok,
           (log.empty() ? "" : log.front()) + buf);
}

void criterion_2() {
    std::vector<std::string> log;
    bool ok = true;
    try {
        const Config cfg(5, 8, {2, 2, 2, 3, 3});
        const Tuple first{1, 1, 1, 3, 2};
        const EquivalenceClass cls = make_equivalence_class(first, cfg);

        if (cls.poset.relations() != std::vector<std::pair<int, int>>{{4, 3}}) {
            ok = false;
            log.push_back("obstruction poset is not exactly {4 before 3}");
        }
        ok &= expect(log, "class size", cls.size(), 12);
        if (cls.marked_L != Signature{2, 4, 3, 1}) {
            ok = false;
            log.push_back("marked signature != (2,4,3,1)");
        }

        const std::vector<std::pair<Signature, Signature>> rows = {
            {{2, 4, 3, 1}, {1, 2, 3, 4}}, {{2, 4, 1, 3}, {1, 2, 4, 3}},
            {{2, 1, 4, 3}, {1, 4, 2, 3}}, {{4, 2, 3, 1}, {2, 1, 3, 4}},
            {{4, 2, 1, 3}, {2, 1, 4, 3}}, {{4, 3, 2, 1}, {2, 3, 1, 4}},
            {{4, 3, 1, 2}, {2, 3, 4, 1}}, {{4, 1, 2, 3}, {2, 4, 1, 3}},
            {{4, 1, 3, 2}, {2, 4, 3, 1}}, {{1, 2, 4, 3}, {4, 1, 2, 3}},
            {{1, 4, 2, 3}, {4, 2, 1, 3}}, {{1, 4, 3, 2}, {4, 2, 3, 1}},
        };
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (cls.signatures[r] != rows[r].first ||
                relative_signature(cls.signatures[r], cls.marked_L) != rows[r].second) {
                ok = false;
                log.push_back("signature table mismatch at row " + std::to_string(r + 1));
                break;
            }
        }

        const auto B = clique_from_signature(first, {1, 4, 2, 3}, cfg);
        const std::vector<Tuple> expected_chain{{1, 1, 1, 3, 2},
                                                {0, 2, 1, 3, 2},
                                                {0, 2, 1, 2, 3},
                                                {0, 1, 2, 2, 3},
                                                {0, 1, 1, 3, 3}};
        if (!B || B->chain != expected_chain) {
            ok = false;
            log.push_back("chain of the signature (1,4,2,3) differs");
        }
    } catch (const std::exception& e) {
        ok = false;
        log.push_back(e.what());
    }
    report(2, "worked-class reproduction (poset, 12 cliques, marked L, table, chain)", ok,
           log.empty() ? "" : log.front());
}

struct SweepOutcome {
    long long configs = 0;
    // per check id: (total failing configs, failing configs outside the
    // characterized exception set)
    std::map<std::string, std::pair<long long, long long>> tally;
    std::map<std::string, std::string> first_outside;
    double elapsed = 0;
};

bool characterized_exception(const Config& cfg) {
    return cfg.alpha().front() == 1 && cfg.d_prime() >= cfg.n();
}

SweepOutcome run_acceptance_sweep() {
    const auto start = std::chrono::steady_clock::now();
    SweepOutcome outcome;
    for (const Config& cfg : sweep_family(5, 8, 400)) {
        const ConfigCheckResult result = check_config(cfg);
        ++outcome.configs;
        const bool excused = characterized_exception(cfg);
        for (const std::string& f : result.failures) {
            const std::string id = f.substr(0, f.find(':'));
            auto& [total, outside] = outcome.tally[id];
            ++total;
            if (!excused) {
                ++outside;
                if (outcome.first_outside[id].empty())
                    outcome.first_outside[id] = "n=" + std::to_string(cfg.n()) +
                                                " d=" + std::to_string(cfg.d()) + " alpha=" +
                                                format_tuple(cfg.alpha()) + " " + f;
            }
        }
    }
    outcome.elapsed = seconds_since(start);
    return outcome;
}

void sweep_criterion(int number, const std::string& name, const SweepOutcome& outcome,
                     const std::string& check, bool budget_check = false) {
    long long total = 0, outside = 0;
    if (const auto it = outcome.tally.find(check); it != outcome.tally.end()) {
        total = it->second.first;
        outside = it->second.second;
    }
    bool ok = total == 0;
    std::string detail = std::to_string(outcome.configs) + " configs";
    if (total > 0) {
        detail += ", " + std::to_string(total) + " violating";
        if (outside == 0)
            detail += ", all inside the characterized set (alpha_1 = 1, d' >= n)";
        else {
            detail += ", " + std::to_string(outside) + " OUTSIDE the characterized set";
            const auto it = outcome.first_outside.find(check);
            if (it != outcome.first_outside.end()) detail += "; first: " + it->second;
        }
    }
    if (budget_check) {
        char buf[32];
        std::snprintf(buf, sizeof buf, ", %.1fs", outcome.elapsed);
        detail += buf;
        if (outcome.elapsed > 300.0) {
            ok = false;
            detail += " (budget of 300 s exceeded)";
        }
    }
    report(number, name, ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();

    const SweepOutcome sweep = run_acceptance_sweep();
    sweep_criterion(3, "clique enumeration equals the graph oracle, all sizes n", sweep,
                    "clique_oracle", /*budget_check=*/true);
    sweep_criterion(4, "every colon ideal linear, omega <= n-1", sweep, "linear_quotients");
    sweep_criterion(5, "max omega matches floor(n - n/d') under both tie-breaks", sweep,
                    "regularity_formula");
    sweep_criterion(6, "counting formulas match the direct counts", sweep,
                    "counting_formulas");
    sweep_criterion(7, "multiplicity, regularity, t invariant under the dual", sweep,
                    "newton_dual");
    sweep_criterion(8, "lower <= multiplicity <= upper", sweep, "bound_sandwich");
    sweep_criterion(9, "peak criterion dichotomy on the reduced configuration", sweep,
                    "peak_dichotomy");

    // not a numbered criterion: the remaining structural laws must never fail
    {
        long long total = 0;
        if (const auto it = sweep.tally.find("aux"); it != sweep.tally.end())
            total = it->second.first;
        std::printf("[%s] auxiliary structural laws across the sweep (%lld violations)\n",
                    total == 0 ? "PASS" : "FAIL", total);
        if (total != 0) ++g_failures;
    }

    if (g_failures == 0) {
        std::printf("all acceptance criteria satisfied\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
}
