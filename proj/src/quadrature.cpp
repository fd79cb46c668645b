#include "sobnorm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace sobnorm {

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi_v<double> * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

void gauss_nodes_1d(int n, int panels, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (panels < 1) throw std::invalid_argument("gauss_nodes_1d: panels must be >= 1");
    const GaussRule& rule = gauss_legendre(n);
    nodes.clear();
    weights.clear();
    nodes.reserve(static_cast<std::size_t>(n * panels));
    weights.reserve(static_cast<std::size_t>(n * panels));
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width, half = 0.5 * width;
        for (int i = 0; i < n; ++i) {
            nodes.push_back(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
            weights.push_back(half * rule.weights[static_cast<std::size_t>(i)]);
        }
    }
}

TensorGrid tensor_grid(const Box& box, const QuadratureSpec& q) {
    if (q.points_per_axis < 1) throw std::invalid_argument("tensor_grid: n must be >= 1");
    const int d = box.dimension();
    std::vector<std::vector<double>> nodes(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> weights(static_cast<std::size_t>(d));
    Eigen::Index total = 1;
    for (int i = 0; i < d; ++i) {
        gauss_nodes_1d(q.points_per_axis, q.panels, box.lo[i], box.hi[i],
                       nodes[static_cast<std::size_t>(i)], weights[static_cast<std::size_t>(i)]);
        total *= static_cast<Eigen::Index>(nodes[static_cast<std::size_t>(i)].size());
    }
    TensorGrid grid;
    grid.nodes.resize(d, total);
    grid.weights.resize(static_cast<std::size_t>(total));
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    for (Eigen::Index c = 0; c < total; ++c) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            grid.nodes(i, c) = nodes[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
            w *= weights[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        }
        grid.weights[static_cast<std::size_t>(c)] = w;
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < nodes[static_cast<std::size_t>(i)].size())
                break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Boundary integrals
// ---------------------------------------------------------------------------

BoundaryNodeSet boundary_nodes(const Atlas& atlas, const QuadratureSpec& q) {
    BoundaryNodeSet set;
    const int m = atlas.dimension() - 1;
    std::vector<std::vector<double>> nodes(static_cast<std::size_t>(m)),
        weights(static_cast<std::size_t>(m));
    for (int r = 0; r < atlas.chart_count(); ++r) {
        const Chart& chart = atlas.chart(r);
        for (int i = 0; i < m; ++i)
            gauss_nodes_1d(q.points_per_axis, q.panels, -chart.half_width(), chart.half_width(),
                           nodes[static_cast<std::size_t>(i)],
                           weights[static_cast<std::size_t>(i)]);
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        const std::size_t per_axis = nodes[0].size();
        std::size_t total = 1;
        for (int i = 0; i < m; ++i) total *= per_axis;
        for (std::size_t c = 0; c < total; ++c) {
            Vector t(m);
            double w = 1.0;
            for (int i = 0; i < m; ++i) {
                t[i] = nodes[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
                w *= weights[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
            }
            const Vector x = chart.boundary_point(t);
            set.chart.push_back(r);
            set.t.push_back(t);
            set.ambient.push_back(x);
            set.weight.push_back(w);
            set.surface_density.push_back(chart.surface_weight(t));
            set.partition.push_back(atlas.partition_value(r, x));
            for (int i = m - 1; i >= 0; --i) {
                if (++idx[static_cast<std::size_t>(i)] < per_axis) break;
                idx[static_cast<std::size_t>(i)] = 0;
            }
        }
    }
    return set;
}

Complex integrate_boundary(const BoundaryOracle& f, const Atlas& atlas, const QuadratureSpec& q) {
    const BoundaryNodeSet set = boundary_nodes(atlas, q);
    std::vector<Complex> terms(set.chart.size());
    for (std::size_t i = 0; i < set.chart.size(); ++i) {
        terms[i] = set.weight[i] * set.partition[i] * set.surface_density[i] *
                   f(set.chart[i], set.t[i], set.ambient[i]);
    }
    return pairwise_sum<Complex>(terms);
}

Complex integrate_gamma(const BoundaryOracle& f, const Atlas& atlas, const GammaSubset& gamma,
                        const QuadratureSpec& q) {
    if (gamma.empty()) throw std::invalid_argument("integrate_gamma: Gamma is empty");
    const int m = atlas.dimension() - 1;
    std::vector<Complex> piece_sums;
    std::vector<std::vector<double>> nodes(static_cast<std::size_t>(m)),
        weights(static_cast<std::size_t>(m));
    for (const GammaPiece& piece : gamma.pieces) {
        const Chart& chart = atlas.chart(piece.chart);
        for (int i = 0; i < m; ++i)
            gauss_nodes_1d(q.points_per_axis, q.panels, piece.lo[i], piece.hi[i],
                           nodes[static_cast<std::size_t>(i)],
                           weights[static_cast<std::size_t>(i)]);
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        std::size_t total = 1;
        for (int i = 0; i < m; ++i) total *= nodes[static_cast<std::size_t>(i)].size();
        std::vector<Complex> terms(total);
        for (std::size_t c = 0; c < total; ++c) {
            Vector t(m);
            double w = 1.0;
            for (int i = 0; i < m; ++i) {
                t[i] = nodes[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
                w *= weights[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
            }
            const Vector x = chart.boundary_point(t);
            terms[c] = w * atlas.partition_value(piece.chart, x) * chart.surface_weight(t) *
                       f(piece.chart, t, x);
            for (int i = m - 1; i >= 0; --i) {
                if (++idx[static_cast<std::size_t>(i)] < nodes[static_cast<std::size_t>(i)].size())
                    break;
                idx[static_cast<std::size_t>(i)] = 0;
            }
        }
        piece_sums.push_back(pairwise_sum<Complex>(terms));
    }
    return pairwise_sum<Complex>(piece_sums);
}

double surface_measure(const Atlas& atlas, const GammaSubset& gamma, const QuadratureSpec& q) {
    return integrate_gamma([](int, const Vector&, const Vector&) { return Complex(1.0, 0.0); },
                           atlas, gamma, q)
        .real();
}

// ---------------------------------------------------------------------------
// Singular double integral
// ---------------------------------------------------------------------------

DoubleSingularResult integrate_double_singular(const TwoPointOracle& g, const Box& box, double s,
                                               double p, const QuadratureSpec& q) {
    if (s <= 0.0 || s >= 1.0)
        throw std::invalid_argument("integrate_double_singular: s must lie in (0,1)");
    if (p < 1.0) throw std::invalid_argument("integrate_double_singular: p must be >= 1");
    if (q.refinement_levels < 1)
        throw std::invalid_argument("integrate_double_singular: refinement_levels must be >= 1");
    const int d = box.dimension();
    const double kernel_pow = static_cast<double>(d) + p * s;
    const double eps0 = q.singular_exclusion > 0.0
                            ? q.singular_exclusion
                            : 2.0 * box.diameter() / static_cast<double>(q.points_per_axis);

    DoubleSingularResult result;
    for (int level = 0; level < q.refinement_levels; ++level) {
        const double eps = eps0 / static_cast<double>(1 << level);
        QuadratureSpec level_spec = q;
        level_spec.points_per_axis = q.points_per_axis << level;
        const TensorGrid grid = tensor_grid(box, level_spec);
        const Eigen::Index n = grid.size();
        std::vector<double> row_sums(static_cast<std::size_t>(n));
        std::vector<double> row(static_cast<std::size_t>(n));
        Vector x(d), y(d);
        for (Eigen::Index i = 0; i < n; ++i) {
            x = grid.nodes.col(i);
            for (Eigen::Index j = 0; j < n; ++j) {
                y = grid.nodes.col(j);
                const double dist = (x - y).norm();
                if (dist < eps) {
                    row[static_cast<std::size_t>(j)] = 0.0;
                    continue;
                }
                const double v = g(x, y) / std::pow(dist, kernel_pow);
                if (!std::isfinite(v))
                    throw std::domain_error(
                        "integrate_double_singular: non-finite value off the diagonal");
                row[static_cast<std::size_t>(j)] =
                    grid.weights[static_cast<std::size_t>(j)] * v;
            }
            row_sums[static_cast<std::size_t>(i)] =
                grid.weights[static_cast<std::size_t>(i)] * pairwise_sum<double>(row);
        }
        result.level_values.push_back(pairwise_sum<double>(row_sums));
    }

    const std::size_t L = result.level_values.size();
    if (L == 1) {
        result.value = result.level_values[0];
        result.error_estimate = 0.0;
        return result;
    }
    // Increment monotonicity is the convergence diagnostic. Exactly-zero
    // increments (e.g. constant integrands) are convergent, not flagged.
    const double scale = std::max(std::abs(result.level_values.back()), 1.0);
    for (std::size_t l = 0; l + 2 < L; ++l) {
        const double inc0 = std::abs(result.level_values[l + 1] - result.level_values[l]);
        const double inc1 = std::abs(result.level_values[l + 2] - result.level_values[l + 1]);
        if (inc1 > inc0 && inc1 > 1e-13 * scale) result.non_convergent = true;
    }
    const double last_increment = result.level_values[L - 1] - result.level_values[L - 2];
    const double rate = p * (1.0 - s);
    const double denom = std::pow(2.0, rate) - 1.0;
    if (denom < 1e-3) {
        // rate ~ 0 (s near 1): extrapolation is ill-posed, flag and return raw.
        result.non_convergent = true;
        result.value = result.level_values[L - 1];
    } else {
        result.value = result.level_values[L - 1] + last_increment / denom;
    }
    result.error_estimate = std::abs(last_increment);
    return result;
}

}  // namespace sobnorm
