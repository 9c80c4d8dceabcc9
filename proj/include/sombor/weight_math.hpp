#pragma once

// Scalar edge-weight kernel for the Sombor index and the two gap functions
// used to reason about degree swaps:
//
//   f(x, y)      = sqrt(x^2 + y^2)
//   g_{a,b}(x)   = f(x, a) - f(x, b)        b > a >= 1, strictly increasing in x
//   h_a(x)       = f(a, x) - f(x, 1)        a > 1,      strictly decreasing in x
//
// h_a(x) == -g_{1,a}(x) holds exactly because both are evaluated from the same
// two square roots.

#include <cmath>
#include <cstdint>
#include <string>

#include "sombor/error.hpp"

namespace sombor {

using Degree = std::int64_t;

namespace detail {

inline void require_degree(Degree d, const char* name) {
    if (d < 1) {
        throw Error(ErrorKind::invalid_argument,
                    std::string("degree ") + name + " must be >= 1, got " + std::to_string(d));
    }
}

inline double hypot_int(Degree x, Degree y) {
    const double xd = static_cast<double>(x);
    const double yd = static_cast<double>(y);
    return std::sqrt(xd * xd + yd * yd);
}

}  // namespace detail

/// Neumaier-compensated running sum. Index values reach ~1e4 for n = 100,
/// where plain accumulation drifts by several ulps.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Sombor edge weight sqrt(x^2 + y^2). Symmetric in its arguments.
inline double edge_weight(Degree x, Degree y) {
    detail::require_degree(x, "x");
    detail::require_degree(y, "y");
    return detail::hypot_int(x, y);
}

/// g_{a,b}(x) = f(x,a) - f(x,b). Negative on the whole domain.
inline double g_gap(Degree a, Degree b, Degree x) {
    detail::require_degree(a, "a");
    detail::require_degree(x, "x");
    if (b <= a) {
        throw Error(ErrorKind::invalid_argument,
                    "g_gap requires b > a, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
    return detail::hypot_int(x, a) - detail::hypot_int(x, b);
}

/// h_a(x) = f(a,x) - f(x,1). Positive on the whole domain.
inline double h_gap(Degree a, Degree x) {
    detail::require_degree(x, "x");
    if (a <= 1) {
        throw Error(ErrorKind::invalid_argument, "h_gap requires a > 1, got a=" + std::to_string(a));
    }
    return detail::hypot_int(a, x) - detail::hypot_int(x, 1);
}

}  // namespace sombor
