#include "veronese/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "veronese/types.hpp"

namespace veronese {

int lex_compare(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) throw ArgumentError("lex_compare: tuples of different length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

bool lex_greater(const Tuple& a, const Tuple& b) { return lex_compare(a, b) > 0; }
bool lex_less(const Tuple& a, const Tuple& b) { return lex_compare(a, b) < 0; }

int tuple_sum(const Tuple& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string format_tuple(const Tuple& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

Config::Config(int n, int d, Tuple alpha) : n_(n), d_(d), alpha_(std::move(alpha)) {
    if (n_ == 2) throw ConfigError("n = 2 is a shifted Veronese ring; use n >= 3");
    if (n_ < 3) throw ConfigError("n must be at least 3");
    if (static_cast<int>(alpha_.size()) != n_)
        throw ConfigError("alpha must have exactly n entries");
    if (alpha_.front() < 1) throw ConfigError("caps must satisfy alpha_1 >= 1");
    if (!std::is_sorted(alpha_.begin(), alpha_.end()))
        throw ConfigError("caps must be nondecreasing: " + format_tuple(alpha_));
    if (alpha_.back() > d_)
        throw ConfigError("caps must satisfy alpha_n <= d (a larger cap is inactive)");
    alpha_sum_ = tuple_sum(alpha_);
    if (d_ == alpha_sum_)
        throw ConfigError("d = |alpha| generates the principal ideal <x^alpha>; rejected");
    if (d_ > alpha_sum_) throw ConfigError("d must satisfy d < |alpha|");
}

int Config::d_prime() const { return std::min(d_, alpha_sum_ - d_); }

std::vector<Tuple> enumerate_points(const Config& config) {
    const int n = config.n();
    std::vector<int> suffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + config.alpha()[i];

    std::vector<Tuple> out;
    Tuple cur(n, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n - 1) {
            cur[i] = remaining;
            out.push_back(cur);
            return;
        }
        const int hi = std::min(config.alpha()[i], remaining);
        const int lo = std::max(0, remaining - suffix[i + 1]);
        for (int c = hi; c >= lo; --c) {
            cur[i] = c;
            self(self, i + 1, remaining - c);
        }
    };
    rec(rec, 0, config.d());
    return out;
}

bool point_in(const Tuple& a, const Config& config) {
    if (static_cast<int>(a.size()) != config.n()) return false;
    int sum = 0;
    for (int i = 0; i < config.n(); ++i) {
        if (a[i] < 0 || a[i] > config.alpha()[i]) return false;
        sum += a[i];
    }
    return sum == config.d();
}

Tuple eta(const Config& config) {
    const int n = config.n();
    Tuple e(n, 0);
    int remaining = config.d();
    for (int i = n - 1; i >= 0; --i) {
        e[i] = std::min(config.alpha()[i], remaining);
        remaining -= e[i];
    }
    detail::ensure(remaining == 0, "eta: degree not exhausted");
    return e;
}

int rank_of(const Tuple& a, const Config& config) {
    const Tuple e = eta(config);
    const int n = config.n();
    int r = 0;
    for (int j = 0; j < n - 1; ++j) r += (a[j] - e[j]) * (n - 1 - j);
    return r;
}

Config newton_dual(const Config& config) {
    const int d2 = config.alpha_sum() - config.d();
    Tuple alpha = config.alpha();
    for (int& c : alpha) c = std::min(c, d2);
    return Config(config.n(), d2, std::move(alpha));
}

PointTable::PointTable(const Config& config)
    : config_(config), points_(enumerate_points(config)), eta_(veronese::eta(config)) {
    detail::ensure(!points_.empty() && points_.back() == eta_,
                   "point table must end at the lex-smallest point");
}

bool PointTable::contains(const Tuple& p) const { return point_in(p, config_); }

int PointTable::index_of(const Tuple& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p,
                               [](const Tuple& x, const Tuple& y) { return lex_greater(x, y); });
    if (it == points_.end() || *it != p)
        throw ArgumentError("index_of: " + format_tuple(p) + " is not a point");
    return static_cast<int>(it - points_.begin());
}

int PointTable::rank_of(const Tuple& a) const {
    const int n = config_.n();
    int r = 0;
    for (int j = 0; j < n - 1; ++j) r += (a[j] - eta_[j]) * (n - 1 - j);
    return r;
}

}  // namespace veronese
