#pragma once

#include <vector>

#include "veronese/types.hpp"

namespace veronese {

/// A Veronese type configuration (n, d, alpha): the degree-d monomials in n
/// variables whose exponent of x_i is capped by alpha_i.
///
/// Validity: n >= 3, alpha nondecreasing with alpha_1 >= 1 and alpha_n <= d,
/// and d < alpha_1 + ... + alpha_n.  The bound d < |alpha| excludes the
/// principal case d = |alpha|; n = 2 collapses to an ordinary Veronese ring
/// and is rejected as well.
class Config {
public:
    Config(int n, int d, Tuple alpha);

    int n() const { return n_; }
    int d() const { return d_; }
    const Tuple& alpha() const { return alpha_; }

    /// alpha_i, 1-based.
    int cap(int i) const { return alpha_[i - 1]; }

    int alpha_sum() const { return alpha_sum_; }

    /// min(d, |alpha| - d), the degree after the cap-complement reduction.
    int d_prime() const;

    friend bool operator==(const Config&, const Config&) = default;

private:
    int n_;
    int d_;
    Tuple alpha_;
    int alpha_sum_;
};

/// All points of the configuration (exponent tuples with sum d and coordinate
/// caps alpha), in strictly lex-descending order.
std::vector<Tuple> enumerate_points(const Config& config);

/// Membership test against the sum and cap constraints.
bool point_in(const Tuple& a, const Config& config);

/// The lex-smallest point: eta_n = alpha_n and, moving right to left,
/// eta_i = min(alpha_i, d - eta_n - ... - eta_{i+1}).
Tuple eta(const Config& config);

/// Weighted coordinate excess over eta: sum over j < n of (a_j - eta_j)(n - j).
int rank_of(const Tuple& a, const Config& config);

/// The cap-complement configuration (n, |alpha| - d, alpha), with caps clamped
/// down to the dual degree where they exceed it (a cap above the degree is
/// inactive, so the point set is unchanged).  c -> alpha - c is a bijection
/// between the point sets of the two configurations.
Config newton_dual(const Config& config);

/// Lex-descending index table built once per configuration; points()[i] has
/// global index i, and every module refers to points through these indices.
class PointTable {
public:
    explicit PointTable(const Config& config);

    const Config& config() const { return config_; }
    const std::vector<Tuple>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    const Tuple& operator[](int i) const { return points_[i]; }

    bool contains(const Tuple& p) const;

    /// Global index of p; throws ArgumentError if p is not a point.
    int index_of(const Tuple& p) const;

    const Tuple& eta() const { return eta_; }
    int rank_of(const Tuple& a) const;

private:
    Config config_;
    std::vector<Tuple> points_;
    Tuple eta_;
};

}  // namespace veronese
