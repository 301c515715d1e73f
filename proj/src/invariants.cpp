#include "veronese/invariants.hpp"

#include <algorithm>
#include <limits>

#include "veronese/cliques.hpp"

namespace veronese {

BigInt binomial(long long m, long long k) {
    if (k < 0 || m < 0 || m < k) return 0;
    k = std::min(k, m - k);
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= m - i;
        result /= i + 1;
    }
    return result;
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

long long to_ll(const BigInt& v, const char* who) {
    detail::ensure(v >= std::numeric_limits<long long>::min() &&
                       v <= std::numeric_limits<long long>::max(),
                   std::string(who) + ": count does not fit in 64 bits");
    return static_cast<long long>(v);
}

// Inclusion-exclusion count of cap-bounded tuples summing to `degree`: each
// subset P of overflowing positions shifts the degree by cap_p + 1.
BigInt bounded_compositions(int degree, const std::vector<int>& caps, int parts) {
    const int n = static_cast<int>(caps.size());
    BigInt total = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        long long shift = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) shift += caps[i] + 1;
        const BigInt term = binomial(degree - shift + parts - 1, parts - 1);
        if (std::popcount(mask) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace

int regularity(const Config& config) {
    const int dp = config.d_prime();
    return config.n() - static_cast<int>(ceil_div(config.n(), dp));
}

int a_invariant(const Config& config) { return regularity(config) - config.n(); }

int reduction_number(const Config& config) { return regularity(config); }

long long multiplicity(const Config& config) {
    long long total = 0;
    for (const EquivalenceClass& cls : equivalence_classes(config)) total += cls.size();
    return total;
}

long long count_t(const Config& config) {
    return to_ll(bounded_compositions(config.d(), config.alpha(), config.n()), "count_t");
}

long long count_G(const Config& config) {
    // start tuples: 1 <= a_1 <= alpha_1, 0 <= a_n <= alpha_n - 1, middles capped
    std::vector<int> caps = config.alpha();
    caps.front() -= 1;
    caps.back() -= 1;
    return to_ll(bounded_compositions(config.d() - 1, caps, config.n()), "count_G");
}

long long count_H(const Config& config) {
    // full classes: middles strictly between 0 and alpha_j
    const int n = config.n();
    std::vector<int> caps = config.alpha();
    caps.front() -= 1;
    caps.back() -= 1;
    for (int i = 1; i < n - 1; ++i) caps[i] -= 2;
    return to_ll(bounded_compositions(config.d() - (n - 1), caps, n), "count_H");
}

MultiplicityBounds multiplicity_bounds(const Config& config) {
    const long long t = count_t(config);
    const int n = config.n();
    if (t <= n)
        throw DegenerateConfigError("multiplicity bounds need t > n (got t = " +
                                    std::to_string(t) + "); the presentation ideal is zero");

    const long long r = regularity(config);
    const long long G = count_G(config);
    const long long H = count_H(config);

    BigInt factorial = 1;
    for (int i = 2; i <= n - 1; ++i) factorial *= i;

    MultiplicityBounds b;
    b.lower = r + t - n;
    b.class_term = BigInt(H) * factorial + BigInt(G - H) * factorial / 2;
    b.d1_term = boost::multiprecision::pow(BigInt(config.d()), n - 1);
    b.d2_term = boost::multiprecision::pow(BigInt(config.alpha_sum() - config.d()), n - 1);
    b.binomial_term = binomial(r + t - n, t - n) - binomial(r - 2 + t - n, t - n);
    b.upper = std::min({b.class_term, b.d1_term, b.d2_term, b.binomial_term});
    return b;
}

InvariantReport make_invariant_report(const Config& config) {
    InvariantReport rep;
    rep.dim = config.n();
    rep.t = count_t(config);
    rep.reg = regularity(config);
    rep.a_inv = a_invariant(config);
    rep.red_num = reduction_number(config);
    rep.G = count_G(config);
    rep.H = count_H(config);
    rep.d_prime = config.d_prime();

    // cross-check every formula against the direct enumerative route
    const PointTable table(config);
    if (rep.t != table.size())
        throw TheoremViolationError("point count formula disagrees with enumeration");

    const std::vector<EquivalenceClass> classes = equivalence_classes(config);
    if (rep.G != static_cast<long long>(classes.size()))
        throw TheoremViolationError("class count formula disagrees with enumeration");

    long long full = 0;
    rep.mult = 0;
    for (const EquivalenceClass& cls : classes) {
        rep.mult += cls.size();
        if (cls.poset.trivial()) ++full;
    }
    if (rep.H != full)
        throw TheoremViolationError("full-class count formula disagrees with enumeration");

    // The closed form can exceed the enumerated projective dimension (exactly
    // when alpha_1 = 1 and d' >= n), so neither reg = pd nor the bound
    // sandwich is asserted here; the sweep checks report both.
    if (rep.t > config.n()) rep.bounds = multiplicity_bounds(config);
    return rep;
}

}  // namespace veronese
