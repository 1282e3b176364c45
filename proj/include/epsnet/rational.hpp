#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace epsnet {

using Scalar = mpq_class;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// num/den in lowest terms
inline Scalar frac(long num, long den) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q", integers and decimal literals such as "-0.25" or "1e-3".
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& s);

// floor(eps * n) for eps >= 0
long long floor_times(const Scalar& eps, long long n);

// Parses a comma separated list of rationals.
std::vector<Scalar> parse_scalar_list(const std::string& text);

}  // namespace epsnet
