#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sobnorm/common.hpp"

namespace sobnorm {

/// Exponent vector in N_0^d. Immutable after construction.
class MultiIndex {
public:
    explicit MultiIndex(Eigen::VectorXi exponents) : e_(std::move(exponents)) {
        if (e_.size() < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        if ((e_.array() < 0).any()) throw std::invalid_argument("MultiIndex: negative exponent");
    }

    MultiIndex(std::initializer_list<int> exponents)
        : MultiIndex(Eigen::Map<const Eigen::VectorXi>(exponents.begin(),
                                                       static_cast<Eigen::Index>(exponents.size()))) {}

    static MultiIndex zero(int dimension) { return MultiIndex(Eigen::VectorXi::Zero(dimension)); }

    /// Unit index e_j (Kronecker row).
    static MultiIndex unit(int dimension, int j) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(dimension);
        e[j] = 1;
        return MultiIndex(std::move(e));
    }

    int dimension() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    const Eigen::VectorXi& exponents() const { return e_; }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }

    /// Componentwise alpha <= beta.
    bool leq(const MultiIndex& beta) const { return (e_.array() <= beta.e_.array()).all(); }

    MultiIndex operator+(const MultiIndex& o) const { return MultiIndex(e_ + o.e_); }

    /// beta - alpha, valid only when alpha.leq(beta).
    MultiIndex minus(const MultiIndex& alpha) const { return MultiIndex(e_ - alpha.e_); }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < dimension(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
        return s + ")";
    }

private:
    Eigen::VectorXi e_;
};

/// Strict ordering: dimension, then lexicographic on exponents. Used as the
/// map key order inside Polynomial, so coefficient iteration is deterministic.
struct MultiIndexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        for (int i = 0; i < a.dimension(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// |alpha|
inline int order(const MultiIndex& alpha) { return alpha.exponents().sum(); }

/// alpha! = prod_i alpha_i!, exact. Throws arithmetic_range_error on overflow.
std::int64_t factorial(const MultiIndex& alpha);

/// Plain integer factorial with the same overflow policy.
std::int64_t factorial(int n);

/// Componentwise binomial prod_i C(beta_i, alpha_i); zero when alpha !<= beta.
std::int64_t binom(const MultiIndex& beta, const MultiIndex& alpha);

struct MonomialDerivative {
    double coefficient;
    MultiIndex exponent;
};

/// d^alpha x^beta = alpha! C(beta,alpha) x^(beta-alpha); coefficient 0 (and
/// zero exponent) when alpha !<= beta.
MonomialDerivative monomial_derivative(const MultiIndex& alpha, const MultiIndex& beta);

enum class EnumerationMode { exact, up_to };

/// All multi-indices with |alpha| = k (exact) or <= k (up_to), dimension d.
/// Order: ascending |alpha| blocks, descending lexicographic inside a block,
/// i.e. d=2, k=2 gives (2,0),(1,1),(0,2).
std::vector<MultiIndex> enumerate_indices(int d, int k, EnumerationMode mode);

/// Element of P_{k-1}: real coefficients on monomials x^beta.
class Polynomial {
public:
    using CoefficientMap = std::map<MultiIndex, double, MultiIndexLess>;

    explicit Polynomial(int dimension) : d_(dimension) {
        if (dimension < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
    }

    Polynomial(int dimension, CoefficientMap coefficients)
        : d_(dimension), c_(std::move(coefficients)) {
        for (const auto& [beta, cb] : c_)
            if (beta.dimension() != d_) throw std::invalid_argument("Polynomial: mixed dimensions");
        prune();
    }

    static Polynomial constant(int dimension, double value) {
        Polynomial p(dimension);
        p.set(MultiIndex::zero(dimension), value);
        return p;
    }

    int dimension() const { return d_; }
    const CoefficientMap& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// Max |beta| over stored terms; -1 for the zero polynomial.
    int degree() const {
        int deg = -1;
        for (const auto& [beta, cb] : c_) deg = std::max(deg, order(beta));
        return deg;
    }

    void set(const MultiIndex& beta, double value) {
        if (beta.dimension() != d_) throw std::invalid_argument("Polynomial: dimension mismatch");
        if (value == 0.0)
            c_.erase(beta);
        else
            c_[beta] = value;
    }

    double coefficient(const MultiIndex& beta) const {
        auto it = c_.find(beta);
        return it == c_.end() ? 0.0 : it->second;
    }

    double operator()(const Vector& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(double factor) const;

private:
    void prune() {
        for (auto it = c_.begin(); it != c_.end();)
            it = (it->second == 0.0) ? c_.erase(it) : std::next(it);
    }

    int d_;
    CoefficientMap c_;
};

/// Coefficientwise d^alpha applied to every monomial of v.
Polynomial polynomial_derivative(const Polynomial& v, const MultiIndex& alpha);

}  // namespace sobnorm
