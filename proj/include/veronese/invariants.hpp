#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "veronese/lattice.hpp"

namespace veronese {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the vanishing convention: 0 when k < 0, m < 0,
/// or m < k.
BigInt binomial(long long m, long long k);

/// reg = floor(n - n/d') = n - ceil(n/d') with d' = min(d, |alpha| - d),
/// in exact integer arithmetic.
int regularity(const Config& config);

/// reg - dim = -ceil(n/d').
int a_invariant(const Config& config);

/// Equals the regularity; valid over an infinite base field.
int reduction_number(const Config& config);

/// Number of maximal cliques of the sortedness graph (by enumeration).
long long multiplicity(const Config& config);

/// Number of points, by inclusion-exclusion over the caps.
long long count_t(const Config& config);

/// Number of equivalence classes (= start tuples), by inclusion-exclusion.
long long count_G(const Config& config);

/// Number of classes realizing all (n-1)! signatures, by inclusion-exclusion.
long long count_H(const Config& config);

struct MultiplicityBounds {
    BigInt lower;
    BigInt upper;
    // the four competing upper-bound terms
    BigInt class_term;     // H (n-1)! + (G - H)(n-1)!/2
    BigInt d1_term;        // d^(n-1)
    BigInt d2_term;        // (|alpha| - d)^(n-1)
    BigInt binomial_term;  // C(r+t-n, t-n) - C(r-2+t-n, t-n)
};

/// lower = r + t - n and upper = min of the four terms.  Throws
/// DegenerateConfigError when t <= n (zero presentation ideal).
MultiplicityBounds multiplicity_bounds(const Config& config);

struct InvariantReport {
    int dim = 0;            // Krull dimension of the algebra (= n)
    long long t = 0;        // number of generators = dim K[T]
    int reg = 0;
    int a_inv = 0;
    int red_num = 0;        // infinite-field assumption
    long long mult = 0;
    long long G = 0;
    long long H = 0;
    int d_prime = 0;
    std::optional<MultiplicityBounds> bounds;  // absent when t <= n
};

/// Full report.  Every formula is cross-checked against the direct
/// enumerative count (points, start tuples, trivial-poset classes, cliques)
/// and the regularity against the max-omega computation; disagreement throws
/// TheoremViolationError.
InvariantReport make_invariant_report(const Config& config);

}  // namespace veronese
