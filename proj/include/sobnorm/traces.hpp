#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sobnorm/atlas.hpp"
#include "sobnorm/domain.hpp"
#include "sobnorm/function_space.hpp"
#include "sobnorm/multiindex.hpp"

namespace sobnorm {

/// Chain-rule engine for chart compositions g_r(t) = u(x_r(t)). Gradient and
/// Hessian fields of u are materialized once; cube derivatives of order <= 2
/// work on any chart with a Hessian oracle, higher orders on affine charts
/// only (the curvature terms vanish there).
class TraceOracle {
public:
    explicit TraceOracle(TestFunction u);

    const TestFunction& function() const { return u_; }
    int ambient_dimension() const { return u_.dimension(); }

    Complex value(const Chart& chart, const Vector& t) const;
    Complex deriv(const Chart& chart, const MultiIndex& alpha_t, const Vector& t) const;

    // d == 2 sugar: first and second t-derivatives of the composition.
    Complex d1(const Chart& chart, double t) const;
    Complex d2(const Chart& chart, double t) const;

private:
    Vector curve_velocity(const Chart& chart, const Vector& t, int axis) const;

    TestFunction u_;
    std::vector<TestFunction> grad_;               // e_k derivatives, if K >= 1
    std::vector<std::vector<TestFunction>> hess_;  // e_k + e_l derivatives, if K >= 2
};

/// A function on the boundary, addressed per chart. Values on chart overlaps
/// must agree (the glued object is well defined); tests sample this.
class BoundaryFunction {
public:
    using ValueFn = std::function<Complex(int chart, const Vector& t)>;
    using DerivFn = std::function<Complex(int chart, const MultiIndex& alpha_t, const Vector& t)>;

    BoundaryFunction() = default;
    BoundaryFunction(int max_order, ValueFn value, DerivFn deriv, std::string id)
        : max_order_(max_order),
          value_(std::move(value)),
          deriv_(std::move(deriv)),
          id_(std::move(id)) {}

    int max_order() const { return max_order_; }
    const std::string& id() const { return id_; }

    Complex value(int chart, const Vector& t) const { return value_(chart, t); }
    Complex value1d(int chart, double t) const { return value_(chart, Vector::Constant(1, t)); }

    Complex derivative(int chart, const MultiIndex& alpha_t, const Vector& t) const {
        if (order(alpha_t) > max_order_)
            throw regularity_error("BoundaryFunction: derivative order beyond the oracle");
        if (order(alpha_t) == 0) return value_(chart, t);
        return deriv_(chart, alpha_t, t);
    }

    Complex derivative1d(int chart, double t, int j) const {
        return derivative(chart, MultiIndex{j}, Vector::Constant(1, t));
    }

private:
    int max_order_ = 0;
    ValueFn value_;
    DerivFn deriv_;
    std::string id_;
};

/// gamma_0 u: per-chart composition with chain-rule derivative oracles.
/// The returned object references `atlas`; keep the atlas alive.
BoundaryFunction trace(const TestFunction& u, const Atlas& atlas);

/// d_nu^l u = sum_{|alpha| = l} (l!/alpha!) nu^alpha gamma_0 d^alpha u.
/// Value oracle only (it is integrated, never differentiated along the cube).
BoundaryFunction normal_derivative(const TestFunction& u, const Atlas& atlas, int l);

/// d == 2: tangential derivative along the boundary through one chart,
/// d_tau u(t) = theta^{-1} (d/dt) u_r(t).
std::function<Complex(double)> tangential_derivative(const TestFunction& u, const Chart& chart);

/// d == 2: second tangential derivative, the rearranged chart identity
/// d_tau^2 u = theta^{-2} [ (d/dt)^2 u_r - (theta'/theta) (d/dt) u_r ].
/// Requires a C^{2,1} chart (theta' uses the graph curvature).
std::function<Complex(double)> tangential_second_derivative(const TestFunction& u,
                                                            const Chart& chart);

/// Residual of the chart identity at one point; dominated by rounding for
/// exact oracles and used as a wiring check:
/// (d/dt)^2 u_r - (theta'/theta)(d/dt) u_r - theta^2 d_tau^2 u.
Complex tangential_identity_residual(const TestFunction& u, const Chart& chart, double t);

// Interpolation trace estimates ------------------------------------------------

enum class InterpKind { halfspace, order0, normal, laplacian, normal_laplacian };

InterpKind interp_kind_from_string(const std::string& s);
std::string to_string(InterpKind kind);

/// Interior orders (j, j+1) entering the right-hand side geometric mean.
int interp_rhs_order(InterpKind kind);

/// Evaluation setting for the bounded-domain kinds; the half-space kind uses
/// only the function's compact support.
struct InterpSetting {
    const Atlas* atlas = nullptr;  // bounded kinds
    DomainSpec domain;             // bounded kinds
};

struct InterpSides {
    double lhs = 0.0;
    double rhs = 0.0;  // ||u||_{j,p}^{(p-1)/p} ||u||_{j+1,p}^{1/p}, constant not applied
    QualityFlags flags;
};

/// lhs = boundary L^p norm of {u, d_nu u, Laplace u, d_nu Laplace u} by kind;
/// rhs = the geometric mean of the interior norms. The half-space kind
/// integrates over the support footprint and requires compact support.
InterpSides interp_lhs_rhs(InterpKind kind, const TestFunction& u, const InterpSetting& setting,
                           double p, const QuadratureSpec& q);

/// Laplacian as a TestFunction (sum of the materialized second derivatives).
TestFunction laplacian(const TestFunction& u);

}  // namespace sobnorm
