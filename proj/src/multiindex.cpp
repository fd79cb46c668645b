#include "sobnorm/multiindex.hpp"

#include <limits>

namespace sobnorm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw arithmetic_range_error("integer overflow in multi-index arithmetic");
    return out;
}

}  // namespace

std::int64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

std::int64_t factorial(const MultiIndex& alpha) {
    std::int64_t f = 1;
    for (int i = 0; i < alpha.dimension(); ++i) f = checked_mul(f, factorial(alpha[i]));
    return f;
}

std::int64_t binom(const MultiIndex& beta, const MultiIndex& alpha) {
    if (beta.dimension() != alpha.dimension())
        throw std::invalid_argument("binom: dimension mismatch");
    if (!alpha.leq(beta)) return 0;
    std::int64_t result = 1;
    for (int i = 0; i < beta.dimension(); ++i) {
        // C(n,k) accumulated multiplicatively; exact because each prefix
        // product n*(n-1)*...*(n-j+1)/j! is itself a binomial coefficient.
        const int n = beta[i], k = alpha[i];
        std::int64_t c = 1;
        for (int j = 1; j <= k; ++j) c = checked_mul(c, n - k + j) / j;
        result = checked_mul(result, c);
    }
    return result;
}

MonomialDerivative monomial_derivative(const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.dimension() != beta.dimension())
        throw std::invalid_argument("monomial_derivative: dimension mismatch");
    if (!alpha.leq(beta))
        return {0.0, MultiIndex::zero(alpha.dimension())};
    const double coeff =
        static_cast<double>(factorial(alpha)) * static_cast<double>(binom(beta, alpha));
    return {coeff, beta.minus(alpha)};
}

namespace {

void enumerate_exact(int d, int k, Eigen::VectorXi& current, int position,
                     std::vector<MultiIndex>& out) {
    if (position == d - 1) {
        current[position] = k;
        out.emplace_back(current);
        return;
    }
    // Descending first entry gives the documented order (k,0,..),(k-1,1,..),...
    for (int e = k; e >= 0; --e) {
        current[position] = e;
        enumerate_exact(d, k - e, current, position + 1, out);
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(int d, int k, EnumerationMode mode) {
    if (d < 1) throw std::invalid_argument("enumerate_indices: d must be >= 1");
    if (k < 0) throw std::invalid_argument("enumerate_indices: k must be >= 0");
    std::vector<MultiIndex> out;
    Eigen::VectorXi current(d);
    if (mode == EnumerationMode::exact) {
        enumerate_exact(d, k, current, 0, out);
    } else {
        for (int j = 0; j <= k; ++j) enumerate_exact(d, j, current, 0, out);
    }
    return out;
}

double Polynomial::operator()(const Vector& x) const {
    if (x.size() != d_) throw std::invalid_argument("Polynomial: point dimension mismatch");
    double value = 0.0;
    for (const auto& [beta, cb] : c_) {
        double term = cb;
        for (int i = 0; i < d_; ++i)
            for (int e = 0; e < beta[i]; ++e) term *= x[i];
        value += term;
    }
    return value;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (o.d_ != d_) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial out = *this;
    for (const auto& [beta, cb] : o.c_) out.set(beta, out.coefficient(beta) + cb);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.d_ != d_) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial out(d_);
    for (const auto& [b1, c1] : c_)
        for (const auto& [b2, c2] : o.c_) {
            const MultiIndex b = b1 + b2;
            out.set(b, out.coefficient(b) + c1 * c2);
        }
    return out;
}

Polynomial Polynomial::scaled(double factor) const {
    Polynomial out(d_);
    for (const auto& [beta, cb] : c_) out.set(beta, cb * factor);
    return out;
}

Polynomial polynomial_derivative(const Polynomial& v, const MultiIndex& alpha) {
    if (alpha.dimension() != v.dimension())
        throw std::invalid_argument("polynomial_derivative: dimension mismatch");
    Polynomial out(v.dimension());
    for (const auto& [beta, cb] : v.coefficients()) {
        const MonomialDerivative md = monomial_derivative(alpha, beta);
        if (md.coefficient != 0.0)
            out.set(md.exponent, out.coefficient(md.exponent) + cb * md.coefficient);
    }
    return out;
}

}  // namespace sobnorm
