#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sobnorm {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Requested derivative exceeds the order a function or chart provides.
class regularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normal/weight query at a point where the chart graph has no gradient.
class not_differentiable_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact-integer helper left the representable range.
class arithmetic_range_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A boundary point is not covered by any chart of the atlas.
class uncovered_boundary_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-tree pairwise reduction. Summation order depends only on the
/// element count, so results are bit-reproducible for a given input order.
template <typename T>
T pairwise_sum(std::span<const T> values) {
    const std::size_t n = values.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = values[0];
        for (std::size_t i = 1; i < n; ++i) acc += values[i];
        return acc;
    }
    const std::size_t mid = n / 2;
    return pairwise_sum(values.subspan(0, mid)) + pairwise_sum(values.subspan(mid));
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
    return pairwise_sum(std::span<const T>(values));
}

/// |z|^p with fast paths for the exponents used throughout (1, 2, 4).
inline double abs_pow(Complex z, double p) {
    const double n2 = std::norm(z);
    if (p == 2.0) return n2;
    if (p == 1.0) return std::sqrt(n2);
    if (p == 4.0) return n2 * n2;
    return std::pow(n2, 0.5 * p);
}

inline double abs_pow(double x, double p) {
    if (p == 2.0) return x * x;
    if (p == 1.0) return std::abs(x);
    if (p == 4.0) return (x * x) * (x * x);
    return std::pow(std::abs(x), p);
}

/// Deterministic uniform generator. Doubles are assembled from the raw
/// 64-bit stream, so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // xorshift* variant; period 2^64-1, passes BigCrush for this use.
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0,1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

struct QualityFlags {
    bool non_convergent = false;
    double error_estimate = 0.0;
    std::string note;

    void merge(const QualityFlags& other) {
        non_convergent = non_convergent || other.non_convergent;
        error_estimate = std::max(error_estimate, other.error_estimate);
        if (note.empty()) note = other.note;
    }
};

}  // namespace sobnorm
