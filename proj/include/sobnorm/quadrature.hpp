#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "sobnorm/atlas.hpp"
#include "sobnorm/common.hpp"

namespace sobnorm {

enum class QuadratureScheme { gauss_legendre_tensor };

/// Deterministic integration parameters. `panels` splits each axis into equal
/// subintervals carrying their own Gauss rule; polynomial exactness per panel
/// is unchanged, steep smooth factors (partition bumps) converge much faster.
struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::gauss_legendre_tensor;
    int points_per_axis = 24;
    int panels = 1;
    double singular_exclusion = 0.0;  // <= 0: auto, 2 * diameter / points_per_axis
    int refinement_levels = 4;

    QuadratureSpec with_points(int n) const {
        QuadratureSpec q = *this;
        q.points_per_axis = n;
        return q;
    }
    QuadratureSpec with_panels(int m) const {
        QuadratureSpec q = *this;
        q.panels = m;
        return q;
    }
};

/// Gauss-Legendre nodes/weights on (-1,1); cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Nodes/weights on (lo,hi), optionally split into equal panels.
void gauss_nodes_1d(int n, int panels, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights);

struct Box {
    Vector lo;
    Vector hi;

    int dimension() const { return static_cast<int>(lo.size()); }
    double volume() const { return (hi - lo).prod(); }
    double diameter() const { return (hi - lo).norm(); }
};

inline Box box1d(double lo, double hi) {
    return {Vector::Constant(1, lo), Vector::Constant(1, hi)};
}

inline Box box2d(double lx, double ly, double hx, double hy) {
    Vector lo(2), hi(2);
    lo << lx, ly;
    hi << hx, hy;
    return {lo, hi};
}

/// Tensor grid over a box; nodes as columns of a d x N matrix.
struct TensorGrid {
    Matrix nodes;
    std::vector<double> weights;

    Eigen::Index size() const { return nodes.cols(); }
};

TensorGrid tensor_grid(const Box& box, const QuadratureSpec& q);

/// Tensor Gauss-Legendre integral over an axis-aligned box. Exact to rounding
/// for per-axis polynomial degree <= 2n-1. Summation is a fixed-tree pairwise
/// reduction, so results do not depend on evaluation parallelism.
template <typename F>
auto integrate_cube(F&& f, const Box& box, const QuadratureSpec& q)
    -> decltype(f(std::declval<const Vector&>())) {
    using T = decltype(f(std::declval<const Vector&>()));
    const TensorGrid grid = tensor_grid(box, q);
    std::vector<T> values(static_cast<std::size_t>(grid.size()));
    Vector x(box.dimension());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        x = grid.nodes.col(i);
        T v = f(x);
        using std::abs;
        if (!std::isfinite(abs(v)))
            throw std::domain_error("integrate_cube: non-finite integrand value at a node");
        values[static_cast<std::size_t>(i)] = grid.weights[static_cast<std::size_t>(i)] * v;
    }
    return pairwise_sum<T>(values);
}

/// Integral of f over the local subgraph region {a(t) < h < a(t) + b} of a
/// chart, computed through the shear (t, h) -> (t, h - a(t)) with unit
/// Jacobian. f receives chart-local coordinates.
template <typename F>
auto integrate_subgraph(F&& f, const Chart& chart, const QuadratureSpec& q)
    -> decltype(f(std::declval<const Vector&>())) {
    const int d = chart.dimension();
    Box sheared{Vector(d), Vector(d)};
    sheared.lo.head(d - 1).setConstant(-chart.half_width());
    sheared.hi.head(d - 1).setConstant(chart.half_width());
    sheared.lo[d - 1] = 0.0;
    sheared.hi[d - 1] = chart.depth();
    return integrate_cube(
        [&](const Vector& y) {
            Vector local = y;
            local[d - 1] += chart.graph().value(y.head(d - 1));
            return f(local);
        },
        sheared, q);
}

/// One boundary-integral node: chart index, cube coordinate, ambient point.
using BoundaryOracle = std::function<Complex(int chart, const Vector& t, const Vector& x)>;

/// Boundary integral per Definition of the surface measure: sum over charts of
/// the cube integrals of f * phi_r * sqrt(1 + |grad a_r|^2). Throws
/// uncovered_boundary_error if a node is covered by no chart (the partition
/// normalization makes "sum phi < 1 - 1e-9" equivalent to an empty cover).
Complex integrate_boundary(const BoundaryOracle& f, const Atlas& atlas, const QuadratureSpec& q);

/// Same measure restricted to a Gamma subset (integration over the listed
/// per-chart sub-boxes, still weighted by the partition of unity).
Complex integrate_gamma(const BoundaryOracle& f, const Atlas& atlas, const GammaSubset& gamma,
                        const QuadratureSpec& q);

/// sigma(Gamma), the (d-1)-dimensional surface measure of the subset.
double surface_measure(const Atlas& atlas, const GammaSubset& gamma, const QuadratureSpec& q);

/// The quadrature node set of one chart cube (shared by the chart-norm and
/// integral-norm paths so node-level bracket arguments hold exactly).
struct BoundaryNodeSet {
    std::vector<int> chart;
    std::vector<Vector> t;
    std::vector<Vector> ambient;
    std::vector<double> weight;           // cube weight
    std::vector<double> surface_density;  // sqrt(1+|grad a|^2)
    std::vector<double> partition;        // phi_r at the node
};

BoundaryNodeSet boundary_nodes(const Atlas& atlas, const QuadratureSpec& q);

struct DoubleSingularResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool non_convergent = false;
    std::vector<double> level_values;
};

/// Two-point numerator oracle g(x, y) = |difference|^p.
using TwoPointOracle = std::function<double(const Vector&, const Vector&)>;

/// Slobodetskii double integral of g(x,y) / |x-y|^{d + p s} over box x box.
/// Each refinement level halves the exclusion radius and doubles the per-axis
/// rule, then the level sequence is Richardson-extrapolated at the rate
/// p(1-s) set by the excluded-strip mass. The last increment is the error
/// estimate; a non-decreasing increment sequence raises a quality flag.
DoubleSingularResult integrate_double_singular(const TwoPointOracle& g, const Box& box, double s,
                                               double p, const QuadratureSpec& q);

}  // namespace sobnorm
