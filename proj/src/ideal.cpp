#include "veronese/ideal.hpp"

#include <sstream>

namespace veronese {

std::vector<Tuple> generators_I(const Config& config) { return enumerate_points(config); }

std::vector<BinomialPair> groebner_pairs(const PointTable& table) {
    const int t = table.size();
    std::vector<BinomialPair> out;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            const auto [w1, w2] = sort_pair(table[i], table[j]);
            if (w1 == table[i] && w2 == table[j]) continue;  // sorted: no relation
            BinomialPair pair;
            pair.lead = {i, j};
            pair.trail = {table.index_of(w1), table.index_of(w2)};
            out.push_back(pair);
        }
    }
    return out;
}

std::vector<DualGenerator> alexander_dual_generators(const PointTable& table,
                                                     const std::vector<MaximalClique>& cliques) {
    const int t = table.size();
    std::vector<DualGenerator> out;
    out.reserve(cliques.size());
    std::vector<char> in_clique(t, 0);
    for (const MaximalClique& mc : cliques) {
        for (const Tuple& p : mc.chain) in_clique[table.index_of(p)] = 1;
        DualGenerator gen;
        gen.support.reserve(t - static_cast<int>(mc.chain.size()));
        for (int v = 0; v < t; ++v) {
            if (in_clique[v])
                in_clique[v] = 0;
            else
                gen.support.push_back(v);
        }
        out.push_back(std::move(gen));
    }
    return out;
}

namespace {

std::string monomial_in_x(const Tuple& exps) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << '*';
        os << 'x' << (i + 1);
        if (exps[i] > 1) os << '^' << exps[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

void header(std::ostringstream& os, const Config& config) {
    os << "-- Veronese type algebra export\n";
    os << "-- config: n=" << config.n() << ", d=" << config.d()
       << ", alpha=" << format_tuple(config.alpha()) << "\n";
}

void index_map(std::ostringstream& os, const PointTable& table) {
    os << "-- generator index map (lex-descending):\n";
    for (int i = 0; i < table.size(); ++i)
        os << "--   T" << i << " -> " << monomial_in_x(table[i]) << "\n";
}

}  // namespace

std::string export_cas(const Config& config, CasObject what) {
    const PointTable table(config);
    std::ostringstream os;
    header(os, config);

    switch (what) {
        case CasObject::Ideal: {
            os << "S = QQ[x1.." << 'x' << config.n() << "];\n";
            os << "I = ideal(\n";
            for (int i = 0; i < table.size(); ++i)
                os << "  " << monomial_in_x(table[i]) << (i + 1 < table.size() ? ",\n" : "\n");
            os << ");\n";
            break;
        }
        case CasObject::Groebner: {
            index_map(os, table);
            os << "T = QQ[T0..T" << table.size() - 1 << "];\n";
            os << "-- sorting relations, lead term first\n";
            os << "GB = {\n";
            const auto pairs = groebner_pairs(table);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const auto& [lead, trail] = pairs[k];
                os << "  T" << lead.first << "*T" << lead.second << " - T" << trail.first
                   << "*T" << trail.second << (k + 1 < pairs.size() ? ",\n" : "\n");
            }
            os << "};\n";
            break;
        }
        case CasObject::Dual: {
            index_map(os, table);
            os << "T = QQ[T0..T" << table.size() - 1 << "];\n";
            os << "-- one generator per maximal clique (complement support)\n";
            os << "D = ideal(\n";
            const auto gens = alexander_dual_generators(table, enumerate_maximal_cliques(config));
            for (std::size_t k = 0; k < gens.size(); ++k) {
                os << "  ";
                for (std::size_t i = 0; i < gens[k].support.size(); ++i) {
                    if (i) os << '*';
                    os << 'T' << gens[k].support[i];
                }
                os << (k + 1 < gens.size() ? ",\n" : "\n");
            }
            os << ");\n";
            break;
        }
    }
    return os.str();
}

}  // namespace veronese
