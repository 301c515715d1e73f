#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace veronese {

/// Exponent tuple of a monomial; also used for plain integer sequences.
using Tuple = std::vector<int>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration whose presentation ideal is zero (generator count <= n).
struct DegenerateConfigError : ConfigError {
    using ConfigError::ConfigError;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structural theorem failed on concrete data; signals an implementation bug.
struct TheoremViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An internal invariant that should be unreachable was violated.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Three-way comparison: +1 if a >lex b (leftmost nonzero entry of a-b is
/// positive), 0 if equal, -1 otherwise.
int lex_compare(const Tuple& a, const Tuple& b);

bool lex_greater(const Tuple& a, const Tuple& b);
bool lex_less(const Tuple& a, const Tuple& b);

int tuple_sum(const Tuple& a);

/// "(1,4,4,5,7)" -- for messages and text output.
std::string format_tuple(const Tuple& a);

namespace detail {
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}
}  // namespace detail

}  // namespace veronese
