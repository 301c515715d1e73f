// Command-line front end: computes points, cliques, classes, the quotient
// order, the linearity verification, invariants, and multiplicity bounds for
// a Veronese type configuration, plus a batch sweep asserting every
// cross-module invariant over a bounded family of configurations.
//
// Exit codes: 0 success, 2 usage error, 3 configuration/validation error,
// 4 theorem violation (or sweep failures), 1 anything else.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include "veronese/checks.hpp"
#include "veronese/cliques.hpp"
#include "veronese/ideal.hpp"
#include "veronese/invariants.hpp"
#include "veronese/lattice.hpp"
#include "veronese/order.hpp"
#include "veronese/serialize.hpp"

namespace {

using namespace veronese;

struct CommonArgs {
    int n = 0;
    int d = 0;
    std::string alpha;
    std::string output = "json";
    std::string tie_break = "first-lex";
};

Tuple parse_alpha(const std::string& s) {
    Tuple out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse cap '" + item + "' in --alpha");
        }
    }
    if (out.empty()) throw ConfigError("--alpha must list at least one cap");
    return out;
}

Config make_config(const CommonArgs& args) {
    Tuple alpha = parse_alpha(args.alpha);
    if (!std::is_sorted(alpha.begin(), alpha.end())) {
        std::cerr << "warning: caps reordered ascending (renaming variables is harmless)\n";
        std::sort(alpha.begin(), alpha.end());
    }
    return Config(args.n, args.d, alpha);
}

TieBreak parse_tie_break(const std::string& s) {
    if (s == "first-lex") return TieBreak::FirstTupleLexDesc;
    if (s == "last-lex") return TieBreak::LastTupleLexAsc;
    throw ConfigError("--tie-break must be first-lex or last-lex");
}

void add_config_options(CLI::App* cmd, CommonArgs& args, bool with_tie_break = false) {
    cmd->add_option("--n", args.n, "number of variables")->required()->envname("VERONESE_N");
    cmd->add_option("--d", args.d, "degree")->required()->envname("VERONESE_D");
    cmd->add_option("--alpha", args.alpha, "comma-separated caps, e.g. 1,4,4,5,7")
        ->required()
        ->envname("VERONESE_ALPHA");
    cmd->add_option("--output", args.output, "json, csv, or text")
        ->envname("VERONESE_OUTPUT");
    if (with_tie_break)
        cmd->add_option("--tie-break", args.tie_break, "first-lex or last-lex")
            ->envname("VERONESE_TIE_BREAK");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

[[noreturn]] void reject_csv(const char* cmd) {
    throw ConfigError(std::string("--output csv is only available for flat tables; '") + cmd +
                      "' emits nested data (use json or text)");
}

int run_points(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const auto points = enumerate_points(cfg);
    if (args.output == "csv") {
        for (int i = 1; i <= cfg.n(); ++i) std::cout << "c" << i << (i < cfg.n() ? "," : "\n");
        for (const Tuple& p : points) {
            for (int i = 0; i < cfg.n(); ++i) std::cout << p[i] << (i + 1 < cfg.n() ? "," : "\n");
        }
    } else if (args.output == "text") {
        std::cout << export_cas(cfg, CasObject::Ideal);
    } else {
        emit(Json{{"config", to_json(cfg)},
                  {"count", points.size()},
                  {"points", points_to_json(points)}});
    }
    return 0;
}

int run_cliques(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const auto cliques = enumerate_maximal_cliques(cfg);
    if (args.output == "csv") reject_csv("cliques");
    if (args.output == "text") {
        for (const MaximalClique& mc : cliques) {
            std::cout << "sgn=" << format_tuple(mc.signature) << "  chain:";
            for (const Tuple& p : mc.chain) std::cout << ' ' << format_tuple(p);
            std::cout << "\n";
        }
        std::cout << "total " << cliques.size() << "\n";
        return 0;
    }
    Json arr = Json::array();
    for (const MaximalClique& mc : cliques) arr.push_back(to_json(mc));
    emit(Json{{"config", to_json(cfg)}, {"count", cliques.size()}, {"cliques", std::move(arr)}});
    return 0;
}

int run_classes(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const auto classes = equivalence_classes(cfg);
    if (args.output == "csv") reject_csv("classes");
    if (args.output == "text") {
        for (const EquivalenceClass& cls : classes)
            std::cout << "first=" << format_tuple(cls.first) << " rank=" << cls.rank
                      << " size=" << cls.size() << " kappa=(" << cls.kappa1 << ','
                      << cls.kappa2 << ") L=" << format_tuple(cls.marked_L) << "\n";
        std::cout << "total " << classes.size() << "\n";
        return 0;
    }
    Json arr = Json::array();
    for (const EquivalenceClass& cls : classes) arr.push_back(to_json(cls));
    emit(Json{{"config", to_json(cfg)}, {"count", classes.size()}, {"classes", std::move(arr)}});
    return 0;
}

int run_order(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const CliqueOrder order = build_order(cfg, parse_tie_break(args.tie_break));
    if (args.output == "csv") reject_csv("order");
    if (args.output == "text") {
        for (std::size_t i = 0; i < order.sequence.size(); ++i) {
            const OrderedClique& oc = order.sequence[i];
            std::cout << i << ": sgn=" << format_tuple(oc.clique.signature)
                      << " rel=" << format_tuple(oc.relative)
                      << " first=" << format_tuple(oc.clique.chain.front())
                      << " rank=" << order.classes[oc.class_index].rank << "\n";
        }
        return 0;
    }
    Json arr = Json::array();
    for (const OrderedClique& oc : order.sequence) {
        Json j = to_json(oc.clique);
        j["relative"] = oc.relative;
        j["class"] = oc.class_index;
        arr.push_back(std::move(j));
    }
    emit(Json{{"config", to_json(cfg)},
              {"tie_break", to_string(order.tie_break)},
              {"count", order.sequence.size()},
              {"cliques", std::move(arr)}});
    return 0;
}

int run_verify(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const CliqueOrder order = build_order(cfg, parse_tie_break(args.tie_break));
    const QuotientReport report = verify_linear_quotients(order);
    if (args.output == "csv") reject_csv("verify");
    if (args.output == "text") {
        std::cout << "all quotients linear; max omega " << report.max_omega << " attained by "
                  << report.top_count << " cliques\n";
        return 0;
    }
    Json j = to_json(report);
    j["config"] = to_json(cfg);
    j["tie_break"] = to_string(order.tie_break);
    emit(j);
    return 0;
}

int run_invariants(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const InvariantReport report = make_invariant_report(cfg);
    if (args.output == "csv") reject_csv("invariants");
    if (args.output == "text") {
        std::cout << "dim " << report.dim << ", t " << report.t << ", G " << report.G << ", H "
                  << report.H << ", reg " << report.reg << ", a " << report.a_inv << ", r "
                  << report.red_num << ", e " << report.mult;
        if (report.bounds)
            std::cout << ", bounds [" << report.bounds->lower << ", " << report.bounds->upper
                      << "]";
        std::cout << "\n";
        return 0;
    }
    Json j = to_json(report);
    j["config"] = to_json(cfg);
    emit(j);
    return 0;
}

int run_bounds(const CommonArgs& args) {
    const Config cfg = make_config(args);
    const MultiplicityBounds bounds = multiplicity_bounds(cfg);
    if (args.output == "csv") reject_csv("bounds");
    if (args.output == "text") {
        std::cout << bounds.lower << " <= e <= " << bounds.upper << "\n";
        return 0;
    }
    Json j = to_json(bounds);
    j["config"] = to_json(cfg);
    emit(j);
    return 0;
}

int run_groebner(const CommonArgs& args) {
    const Config cfg = make_config(args);
    if (args.output == "csv") reject_csv("groebner");
    if (args.output == "text") {
        std::cout << export_cas(cfg, CasObject::Groebner);
        return 0;
    }
    const PointTable table(cfg);
    const auto pairs = groebner_pairs(table);
    Json arr = Json::array();
    for (const BinomialPair& bp : pairs) arr.push_back(to_json(bp));
    emit(Json{{"config", to_json(cfg)}, {"count", pairs.size()}, {"pairs", std::move(arr)}});
    return 0;
}

int run_dual(const CommonArgs& args) {
    const Config cfg = make_config(args);
    if (args.output == "csv") reject_csv("dual");
    if (args.output == "text") {
        std::cout << export_cas(cfg, CasObject::Dual);
        return 0;
    }
    const PointTable table(cfg);
    const auto gens = alexander_dual_generators(table, enumerate_maximal_cliques(cfg));
    Json arr = Json::array();
    for (const DualGenerator& g : gens) arr.push_back(g.support);
    emit(Json{{"config", to_json(cfg)},
              {"count", gens.size()},
              {"degree", table.size() - cfg.n()},
              {"generators", std::move(arr)}});
    return 0;
}

int run_sweep_command(const SweepOptions& options, const std::string& output) {
    const SweepSummary summary = run_sweep(options);
    if (output == "csv") {
        std::cout << "n,d,alpha,t,mult,reg,max_omega,ok\n";
        for (const ConfigCheckResult& r : summary.results) {
            std::cout << r.config.n() << ',' << r.config.d() << ',';
            const Tuple& a = r.config.alpha();
            for (std::size_t i = 0; i < a.size(); ++i) std::cout << (i ? " " : "") << a[i];
            std::cout << ',' << r.t << ',' << r.mult << ',' << r.reg << ',' << r.max_omega << ','
                      << (r.ok() ? 1 : 0) << "\n";
        }
    } else if (output == "text") {
        std::cout << summary.configs << " configurations, " << summary.failed_configs
                  << " failed\n";
        for (const ConfigCheckResult& r : summary.results)
            for (const std::string& f : r.failures)
                std::cout << "  n=" << r.config.n() << " d=" << r.config.d()
                          << " alpha=" << format_tuple(r.config.alpha()) << "  " << f << "\n";
    } else {
        Json failures = Json::array();
        for (const ConfigCheckResult& r : summary.results) {
            if (r.ok()) continue;
            failures.push_back(Json{{"config", to_json(r.config)}, {"failures", r.failures}});
        }
        Json counts = Json::object();
        for (const auto& [check, count] : summary.failure_counts) counts[check] = count;
        emit(Json{{"max_n", options.max_n},
                  {"max_d", options.max_d},
                  {"max_t", options.max_t},
                  {"sample", options.sample},
                  {"seed", options.seed},
                  {"configs", summary.configs},
                  {"failed", summary.failed_configs},
                  {"failure_counts", std::move(counts)},
                  {"failures", std::move(failures)}});
    }
    return summary.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics and invariants of Veronese type algebras"};
    app.require_subcommand(1);

    CommonArgs args;
    SweepOptions sweep_options;
    std::string sweep_output = "json";

    auto* points = app.add_subcommand("points", "lattice points, lex-descending");
    add_config_options(points, args);
    auto* cliques = app.add_subcommand("cliques", "maximal cliques of the sortedness graph");
    add_config_options(cliques, args);
    auto* classes = app.add_subcommand("classes", "equivalence classes with posets and marks");
    add_config_options(classes, args);
    auto* order = app.add_subcommand("order", "total quotient order on the maximal cliques");
    add_config_options(order, args, true);
    auto* verify = app.add_subcommand("verify", "linear-quotient verification (oracle)");
    add_config_options(verify, args, true);
    auto* invariants = app.add_subcommand("invariants", "full invariant report");
    add_config_options(invariants, args);
    auto* bounds = app.add_subcommand("bounds", "multiplicity bounds and their terms");
    add_config_options(bounds, args);
    auto* groebner = app.add_subcommand("groebner", "sorting relations of the presentation ideal");
    add_config_options(groebner, args);
    auto* dual = app.add_subcommand("dual", "dual generators (clique complements)");
    add_config_options(dual, args);

    auto* sweep = app.add_subcommand("sweep", "invariant suite over a family of configurations");
    sweep->add_option("--max-n", sweep_options.max_n, "largest n")->envname("VERONESE_MAX_N");
    sweep->add_option("--max-d", sweep_options.max_d, "largest d")->envname("VERONESE_MAX_D");
    sweep->add_option("--max-t", sweep_options.max_t, "largest point count")
        ->envname("VERONESE_MAX_T");
    sweep->add_option("--sample", sweep_options.sample, "randomly sample this many configs")
        ->envname("VERONESE_SAMPLE");
    sweep->add_option("--seed", sweep_options.seed, "sampling seed")->envname("VERONESE_SEED");
    sweep->add_option("--output", sweep_output, "json, csv, or text")->envname("VERONESE_OUTPUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (points->parsed()) return run_points(args);
        if (cliques->parsed()) return run_cliques(args);
        if (classes->parsed()) return run_classes(args);
        if (order->parsed()) return run_order(args);
        if (verify->parsed()) return run_verify(args);
        if (invariants->parsed()) return run_invariants(args);
        if (bounds->parsed()) return run_bounds(args);
        if (groebner->parsed()) return run_groebner(args);
        if (dual->parsed()) return run_dual(args);
        if (sweep->parsed()) return run_sweep_command(sweep_options, sweep_output);
    } catch (const TheoremViolationError& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
