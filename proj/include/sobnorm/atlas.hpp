#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sobnorm/common.hpp"

namespace sobnorm {

/// Graph function a_r on the chart cube (-a,a)^{d-1}. Oracles must be pure.
class GraphFunction {
public:
    virtual ~GraphFunction() = default;

    virtual int domain_dimension() const = 0;
    virtual double value(const Vector& t) const = 0;
    virtual Vector gradient(const Vector& t) const = 0;
    virtual Matrix hessian(const Vector& t) const {
        throw regularity_error("graph function has no Hessian oracle");
    }
    virtual bool differentiable_at(const Vector& t) const { return true; }

    /// Highest derivative order with an oracle (a.e. for kinked graphs).
    virtual int smooth_order() const = 0;

    /// One-dimensional graphs expose higher t-derivatives directly.
    virtual double derivative1d(double t, int order) const;

    /// Serialized form for the atlas file grammar; empty if not expressible.
    virtual std::string file_spec() const { return {}; }
};

/// a_r == c (default 0).
class FlatGraph final : public GraphFunction {
public:
    explicit FlatGraph(int domain_dim, double level = 0.0) : dim_(domain_dim), level_(level) {}
    int domain_dimension() const override { return dim_; }
    double value(const Vector&) const override { return level_; }
    Vector gradient(const Vector&) const override { return Vector::Zero(dim_); }
    Matrix hessian(const Vector&) const override { return Matrix::Zero(dim_, dim_); }
    int smooth_order() const override { return 99; }
    double derivative1d(double, int order) const override { return order == 0 ? level_ : 0.0; }
    std::string file_spec() const override;

private:
    int dim_;
    double level_;
};

/// a_r(t) = c + g . t
class AffineGraph final : public GraphFunction {
public:
    AffineGraph(Vector slope, double level = 0.0) : g_(std::move(slope)), level_(level) {}
    int domain_dimension() const override { return static_cast<int>(g_.size()); }
    double value(const Vector& t) const override { return level_ + g_.dot(t); }
    Vector gradient(const Vector&) const override { return g_; }
    Matrix hessian(const Vector&) const override { return Matrix::Zero(g_.size(), g_.size()); }
    int smooth_order() const override { return 99; }
    double derivative1d(double t, int order) const override;
    std::string file_spec() const override;

private:
    Vector g_;
    double level_;
};

/// One-dimensional polynomial graph a(t) = sum_j c_j t^j.
class PolyGraph final : public GraphFunction {
public:
    explicit PolyGraph(std::vector<double> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty()) c_.push_back(0.0);
    }
    int domain_dimension() const override { return 1; }
    double value(const Vector& t) const override { return derivative1d(t[0], 0); }
    Vector gradient(const Vector& t) const override {
        return Vector::Constant(1, derivative1d(t[0], 1));
    }
    Matrix hessian(const Vector& t) const override {
        return Matrix::Constant(1, 1, derivative1d(t[0], 2));
    }
    int smooth_order() const override { return 99; }
    double derivative1d(double t, int order) const override;
    std::string file_spec() const override;

private:
    std::vector<double> c_;
};

/// Lipschitz wedge a(t) = slope * |t|; kink at t = 0.
class WedgeGraph final : public GraphFunction {
public:
    explicit WedgeGraph(double slope) : slope_(slope) {}
    int domain_dimension() const override { return 1; }
    double value(const Vector& t) const override { return slope_ * std::abs(t[0]); }
    Vector gradient(const Vector& t) const override;
    Matrix hessian(const Vector& t) const override;
    bool differentiable_at(const Vector& t) const override { return t[0] != 0.0; }
    int smooth_order() const override { return 99; }  // a.e.; kink handled by differentiable_at
    double derivative1d(double t, int order) const override;
    std::string file_spec() const override;
    double slope() const { return slope_; }

private:
    double slope_;
};

/// Lower circular arc a(t) = -sqrt(R^2 - t^2), |t| < R.
class CircleGraph final : public GraphFunction {
public:
    explicit CircleGraph(double radius) : R_(radius) {
        if (radius <= 0.0) throw std::invalid_argument("CircleGraph: radius must be positive");
    }
    int domain_dimension() const override { return 1; }
    double value(const Vector& t) const override { return derivative1d(t[0], 0); }
    Vector gradient(const Vector& t) const override {
        return Vector::Constant(1, derivative1d(t[0], 1));
    }
    Matrix hessian(const Vector& t) const override {
        return Matrix::Constant(1, 1, derivative1d(t[0], 2));
    }
    int smooth_order() const override { return 3; }
    double derivative1d(double t, int order) const override;
    std::string file_spec() const override;

private:
    double R_;
};

struct RegularityClass {
    int k = 0;
    double mu = 1.0;  // Hoelder exponent in [0,1]
};

/// One local graph patch of the boundary: cube, depth, graph oracle and the
/// orthonormal frame mapping local coordinates (t, h) to ambient space,
/// x = offset + rotation * (t, h). The domain lies on the h > a(t) side.
class Chart {
public:
    Chart(Matrix rotation, Vector offset, double half_width, double depth,
          std::shared_ptr<const GraphFunction> graph, RegularityClass declared);

    int dimension() const { return static_cast<int>(offset_.size()); }
    double half_width() const { return half_width_; }
    double depth() const { return depth_; }
    const Matrix& rotation() const { return rotation_; }
    const Vector& offset() const { return offset_; }
    const GraphFunction& graph() const { return *graph_; }
    std::shared_ptr<const GraphFunction> graph_ptr() const { return graph_; }
    RegularityClass declared_class() const { return declared_; }

    Vector to_ambient(const Vector& local) const { return offset_ + rotation_ * local; }
    Vector from_ambient(const Vector& x) const { return rotation_.transpose() * (x - offset_); }

    /// Ambient position of the graph point (t, a(t)).
    Vector boundary_point(const Vector& t) const;
    Vector boundary_point1d(double t) const;

    bool inside_cube(const Vector& t) const {
        return (t.array().abs() < half_width_).all();
    }

    /// Outer unit normal in the local frame: (grad a, -1)/sqrt(1+|grad a|^2).
    Vector normal_local(const Vector& t) const;
    Vector normal_ambient(const Vector& t) const { return rotation_ * normal_local(t); }

    /// Surface density sqrt(1 + |grad a|^2) >= 1.
    double surface_weight(const Vector& t) const;

    // d == 2 helpers (scalar chart coordinate).
    double theta(double t) const;
    double theta_prime(double t) const;
    Vector tangent_ambient(double t) const;

private:
    void require_gradient(const Vector& t) const;

    Matrix rotation_;
    Vector offset_;
    double half_width_;
    double depth_;
    std::shared_ptr<const GraphFunction> graph_;
    RegularityClass declared_;
};

/// sup |theta'/theta|, inf theta^2, sup theta^2 over an inclusive sample grid.
struct ChartConstants {
    double c1;  // sup |theta'/theta|
    double c2;  // inf theta^2
    double c3;  // sup theta^2
};

ChartConstants chart_constants(const Chart& chart, int samples_per_axis = 4097);

/// Address of a boundary point: chart index + local cube coordinate.
struct BoundaryPoint {
    int chart;
    Vector t;
};

/// Chart atlas of a bounded Lipschitz boundary with its partition of unity.
/// The partition is built from the bump template psi(t) = exp(1/(t^2-1))
/// scaled to each chart cube and normalized over the covering charts.
class Atlas {
public:
    Atlas(int dimension, std::vector<Chart> charts);

    int dimension() const { return d_; }
    int chart_count() const { return static_cast<int>(charts_.size()); }
    const Chart& chart(int r) const { return charts_.at(static_cast<std::size_t>(r)); }
    const std::vector<Chart>& charts() const { return charts_; }

    Vector ambient(const BoundaryPoint& bp) const {
        return chart(bp.chart).boundary_point(bp.t);
    }

    /// Charts whose cube and graph band contain the ambient point x.
    std::vector<int> covering_charts(const Vector& x) const;

    /// log of the unnormalized bump of chart r at x; -inf outside V_r.
    double log_bump(int r, const Vector& x) const;

    /// phi_r(x). Throws uncovered_boundary_error when no chart covers x.
    double partition_value(int r, const Vector& x) const;

    /// All phi_r(x) at once (sums to 1 wherever defined).
    Vector partition_values(const Vector& x) const;

private:
    int d_;
    std::vector<Chart> charts_;
};

/// Boundary subset as a union of per-chart open sub-boxes of the chart cubes.
/// Pieces in different charts that cover the same ambient set are listed for
/// every covering chart, so partition-weighted integrals stay consistent.
struct GammaPiece {
    int chart;
    Vector lo;
    Vector hi;
};

struct GammaSubset {
    std::vector<GammaPiece> pieces;
    std::string id;

    bool empty() const { return pieces.empty(); }
};

/// Sample ambient points of Gamma, proportional to piece count (deterministic).
std::vector<Vector> sample_gamma_points(const Atlas& atlas, const GammaSubset& gamma,
                                        int count, Rng& rng);

/// Whether the sampled Gamma lies in an affine hyperplane of R^d.
bool gamma_in_hyperplane(const Atlas& atlas, const GammaSubset& gamma, int samples = 200);

/// Sampled Hoelder-quotient certificate for |d^alpha a(x) - d^alpha a(y)|
/// <= c |x-y|^mu, |alpha| <= k. Never a proof; reports the max quotient per
/// derivative order on successively refined grids.
struct RegularityGrid {
    int points = 64;
    int levels = 3;
};

struct RegularityReport {
    int k;
    double mu;
    double bound;
    // quotients[order][level] = max sampled quotient for derivative order at grid level
    std::vector<std::vector<double>> quotients;
    bool pass;
};

RegularityReport verify_regularity(const Chart& chart, int k, double mu,
                                   const RegularityGrid& grid, double bound);

// Built-in atlas factories.

/// Unit square (0,1)^2: four edge charts plus four rotated corner charts whose
/// graphs are slope-1 Lipschitz wedges.
Atlas unit_square_atlas();

/// Disk of radius R centered at the origin: four rotated circular-arc charts
/// restricted away from the equator ends.
Atlas disk_atlas(double radius = 1.0);

/// Single flat chart of large nominal extent for the half-space setting; only
/// meaningful together with compactly supported functions.
Atlas halfspace_patch(int dimension, double extent = 1e6);

/// Two overlapping flat charts on a line segment (C^inf boundary piece).
Atlas flat_curve_atlas();

/// Two parabola charts a(t) = t^2/2 in rotated frames (C^{2,1} boundary piece).
Atlas parabola_curve_atlas();

// Gamma factories for the built-in square atlas.
GammaSubset square_bottom_edge(const Atlas& square);
GammaSubset square_left_edge(const Atlas& square);

// Atlas description file (grammar documented in README).
Atlas load_atlas(const std::string& path);
void save_atlas(const Atlas& atlas, const std::string& path);

}  // namespace sobnorm
