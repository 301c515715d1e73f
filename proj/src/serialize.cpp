#include "veronese/serialize.hpp"

namespace veronese {

Json json_int(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json to_json(const Config& config) {
    return Json{{"n", config.n()}, {"d", config.d()}, {"alpha", config.alpha()}};
}

Config config_from_json(const Json& j) {
    return Config(j.at("n").get<int>(), j.at("d").get<int>(), j.at("alpha").get<Tuple>());
}

Json to_json(const SortingSignature& sig) {
    Json j = Json::array();
    for (const auto& [lo, hi] : sig.intervals) j.push_back(Json::array({lo, hi}));
    return j;
}

Json to_json(const MaximalClique& clique) {
    return Json{{"chain", clique.chain}, {"signature", clique.signature}};
}

Json to_json(const EquivalenceClass& cls) {
    return Json{{"first", cls.first},
                {"last", cls.last},
                {"kappa", Json::array({cls.kappa1, cls.kappa2})},
                {"L", cls.marked_L},
                {"rank", cls.rank},
                {"size", cls.size()}};
}

Json to_json(const BinomialPair& pair) {
    return Json{{"lead", Json::array({pair.lead.first, pair.lead.second})},
                {"trail", Json::array({pair.trail.first, pair.trail.second})}};
}

Json to_json(const QuotientReport& report) {
    Json records = Json::array();
    for (const QuotientRecord& rec : report.records)
        records.push_back(Json{{"clique", rec.clique}, {"omega", rec.omega}, {"linear", rec.linear}});
    return Json{{"report", std::move(records)},
                {"max_omega", report.max_omega},
                {"top_count", report.top_count},
                {"all_linear", report.all_linear}};
}

Json to_json(const MultiplicityBounds& bounds) {
    return Json{{"lower", json_int(bounds.lower)},
                {"upper", json_int(bounds.upper)},
                {"terms",
                 Json{{"class_count", json_int(bounds.class_term)},
                      {"d1_power", json_int(bounds.d1_term)},
                      {"d2_power", json_int(bounds.d2_term)},
                      {"binomial", json_int(bounds.binomial_term)}}}};
}

Json to_json(const InvariantReport& report) {
    Json j{{"dim", report.dim},
           {"t", report.t},
           {"G", report.G},
           {"H", report.H},
           {"reg", report.reg},
           {"a_invariant", report.a_inv},
           {"reduction_number", report.red_num},
           {"field_assumption", "infinite"},
           {"multiplicity", report.mult},
           {"d_prime", report.d_prime}};
    if (report.bounds) {
        j["lower_bound"] = json_int(report.bounds->lower);
        j["upper_bound"] = json_int(report.bounds->upper);
        j["bound_terms"] = to_json(*report.bounds)["terms"];
    } else {
        j["degenerate"] = true;
    }
    return j;
}

Json points_to_json(const std::vector<Tuple>& points) { return Json(points); }

std::vector<Tuple> points_from_json(const Json& j) { return j.get<std::vector<Tuple>>(); }

}  // namespace veronese
