#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sadi/errors.hpp"

namespace sadi {

/// Point in the N-dimensional real state space.
using StateVector = std::vector<double>;

inline bool all_finite(std::span<const double> x) {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline void require_same_dim(std::span<const double> a, std::span<const double> b,
                             const char* what) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

inline double distance(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline StateVector add(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "add");
    StateVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline StateVector sub(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "sub");
    StateVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline StateVector scaled(std::span<const double> a, double c) {
    StateVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/// a + c*b
inline StateVector axpy(std::span<const double> a, double c, std::span<const double> b) {
    require_same_dim(a, b, "axpy");
    StateVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
    return r;
}

/// (1-t)*a + t*b, evaluated as a + t*(b-a)
inline StateVector lerp(std::span<const double> a, std::span<const double> b, double t) {
    require_same_dim(a, b, "lerp");
    StateVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

}  // namespace sadi
