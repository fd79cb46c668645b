#include "sobnorm/atlas.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

namespace sobnorm {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// Graph functions
// ---------------------------------------------------------------------------

double GraphFunction::derivative1d(double t, int order) const {
    if (domain_dimension() != 1)
        throw std::invalid_argument("derivative1d: graph is not one-dimensional");
    const Vector tt = Vector::Constant(1, t);
    switch (order) {
        case 0: return value(tt);
        case 1: return gradient(tt)[0];
        case 2: return hessian(tt)(0, 0);
        default: throw regularity_error("graph derivative order not available");
    }
}

std::string FlatGraph::file_spec() const {
    std::ostringstream os;
    os << "flat " << level_;
    return os.str();
}

double AffineGraph::derivative1d(double t, int order) const {
    if (domain_dimension() != 1)
        throw std::invalid_argument("derivative1d: graph is not one-dimensional");
    if (order == 0) return level_ + g_[0] * t;
    if (order == 1) return g_[0];
    return 0.0;
}

std::string AffineGraph::file_spec() const {
    std::ostringstream os;
    os << "affine " << level_;
    for (int i = 0; i < g_.size(); ++i) os << ' ' << g_[i];
    return os.str();
}

double PolyGraph::derivative1d(double t, int order) const {
    // Horner on the coefficients of the order-th derivative.
    double acc = 0.0;
    for (int j = static_cast<int>(c_.size()) - 1; j >= order; --j) {
        double fall = 1.0;
        for (int m = 0; m < order; ++m) fall *= static_cast<double>(j - m);
        acc = acc * t + c_[static_cast<std::size_t>(j)] * fall;
    }
    return acc;
}

std::string PolyGraph::file_spec() const {
    std::ostringstream os;
    os << "poly";
    for (double c : c_) os << ' ' << c;
    return os.str();
}

Vector WedgeGraph::gradient(const Vector& t) const {
    if (t[0] == 0.0) throw not_differentiable_error("wedge graph kink at t = 0");
    return Vector::Constant(1, t[0] > 0.0 ? slope_ : -slope_);
}

Matrix WedgeGraph::hessian(const Vector& t) const {
    if (t[0] == 0.0) throw not_differentiable_error("wedge graph kink at t = 0");
    return Matrix::Zero(1, 1);
}

double WedgeGraph::derivative1d(double t, int order) const {
    if (order == 0) return slope_ * std::abs(t);
    if (t == 0.0) throw not_differentiable_error("wedge graph kink at t = 0");
    if (order == 1) return t > 0.0 ? slope_ : -slope_;
    return 0.0;
}

std::string WedgeGraph::file_spec() const {
    std::ostringstream os;
    os << "wedge " << slope_;
    return os.str();
}

double CircleGraph::derivative1d(double t, int order) const {
    const double s2 = R_ * R_ - t * t;
    if (s2 <= 0.0) {
        if (order == 0 && s2 == 0.0) return 0.0;
        throw not_differentiable_error("circle graph at |t| >= R");
    }
    const double s = std::sqrt(s2);
    switch (order) {
        case 0: return -s;
        case 1: return t / s;
        case 2: return R_ * R_ / (s2 * s);
        case 3: return 3.0 * R_ * R_ * t / (s2 * s2 * s);
        default: throw regularity_error("circle graph derivative order > 3 not provided");
    }
}

std::string CircleGraph::file_spec() const {
    std::ostringstream os;
    os << "circle " << R_;
    return os.str();
}

// ---------------------------------------------------------------------------
// Chart
// ---------------------------------------------------------------------------

Chart::Chart(Matrix rotation, Vector offset, double half_width, double depth,
             std::shared_ptr<const GraphFunction> graph, RegularityClass declared)
    : rotation_(std::move(rotation)),
      offset_(std::move(offset)),
      half_width_(half_width),
      depth_(depth),
      graph_(std::move(graph)),
      declared_(declared) {
    const int d = dimension();
    if (d < 2) throw std::invalid_argument("Chart: ambient dimension must be >= 2");
    if (rotation_.rows() != d || rotation_.cols() != d)
        throw std::invalid_argument("Chart: rotation must be d x d");
    if (half_width_ <= 0.0 || depth_ <= 0.0)
        throw std::invalid_argument("Chart: half_width and depth must be positive");
    if (!graph_ || graph_->domain_dimension() != d - 1)
        throw std::invalid_argument("Chart: graph dimension mismatch");
    const Matrix gram = rotation_.transpose() * rotation_;
    if ((gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("Chart: frame is not orthonormal");
    if (rotation_.determinant() < 0.0)
        throw std::invalid_argument("Chart: frame must be orientation-preserving");
    // Finiteness of the graph on the closed cube, sampled at corners + center.
    const int m = d - 1;
    for (long mask = 0; mask < (1L << m); ++mask) {
        Vector corner(m);
        for (int i = 0; i < m; ++i) corner[i] = (mask >> i) & 1 ? half_width_ : -half_width_;
        if (!std::isfinite(graph_->value(corner)))
            throw std::invalid_argument("Chart: graph not finite on the closed cube");
    }
    if (!std::isfinite(graph_->value(Vector::Zero(m))))
        throw std::invalid_argument("Chart: graph not finite at the cube center");
}

Vector Chart::boundary_point(const Vector& t) const {
    Vector local(dimension());
    local.head(dimension() - 1) = t;
    local[dimension() - 1] = graph_->value(t);
    return to_ambient(local);
}

Vector Chart::boundary_point1d(double t) const {
    return boundary_point(Vector::Constant(1, t));
}

void Chart::require_gradient(const Vector& t) const {
    if (!graph_->differentiable_at(t))
        throw not_differentiable_error("chart graph not differentiable at this point");
}

Vector Chart::normal_local(const Vector& t) const {
    require_gradient(t);
    const Vector g = graph_->gradient(t);
    Vector n(dimension());
    n.head(dimension() - 1) = g;
    n[dimension() - 1] = -1.0;
    return n / std::sqrt(1.0 + g.squaredNorm());
}

double Chart::surface_weight(const Vector& t) const {
    require_gradient(t);
    return std::sqrt(1.0 + graph_->gradient(t).squaredNorm());
}

double Chart::theta(double t) const {
    if (dimension() != 2) throw std::invalid_argument("theta: requires d == 2");
    const double ap = graph_->derivative1d(t, 1);
    return std::sqrt(1.0 + ap * ap);
}

double Chart::theta_prime(double t) const {
    if (dimension() != 2) throw std::invalid_argument("theta_prime: requires d == 2");
    const double ap = graph_->derivative1d(t, 1);
    const double app = graph_->derivative1d(t, 2);
    return ap * app / std::sqrt(1.0 + ap * ap);
}

Vector Chart::tangent_ambient(double t) const {
    if (dimension() != 2) throw std::invalid_argument("tangent_ambient: requires d == 2");
    Vector v(2);
    v[0] = 1.0;
    v[1] = graph_->derivative1d(t, 1);
    return rotation_ * (v / v.norm());
}

ChartConstants chart_constants(const Chart& chart, int samples_per_axis) {
    if (chart.dimension() != 2)
        throw std::invalid_argument("chart_constants: requires d == 2");
    if (chart.declared_class().k < 1 || chart.graph().smooth_order() < 2)
        throw regularity_error("chart_constants: chart must be of class at least C^{1,1}");
    if (samples_per_axis < 2) throw std::invalid_argument("chart_constants: need >= 2 samples");
    const double hw = chart.half_width();
    double c1 = 0.0, c2 = std::numeric_limits<double>::infinity(), c3 = 0.0;
    for (int i = 0; i < samples_per_axis; ++i) {
        const double t = -hw + 2.0 * hw * static_cast<double>(i) / (samples_per_axis - 1);
        const double th = chart.theta(t);
        const double tp = chart.theta_prime(t);
        c1 = std::max(c1, std::abs(tp / th));
        c2 = std::min(c2, th * th);
        c3 = std::max(c3, th * th);
    }
    return {c1, c2, c3};
}

// ---------------------------------------------------------------------------
// Atlas and partition of unity
// ---------------------------------------------------------------------------

Atlas::Atlas(int dimension, std::vector<Chart> charts) : d_(dimension), charts_(std::move(charts)) {
    if (d_ < 2) throw std::invalid_argument("Atlas: dimension must be >= 2");
    if (charts_.empty()) throw std::invalid_argument("Atlas: needs at least one chart");
    for (const Chart& c : charts_)
        if (c.dimension() != d_) throw std::invalid_argument("Atlas: chart dimension mismatch");
}

double Atlas::log_bump(int r, const Vector& x) const {
    const Chart& c = chart(r);
    const Vector local = c.from_ambient(x);
    const Vector t = local.head(d_ - 1);
    if (!c.inside_cube(t)) return kNegInf;
    const double h = local[d_ - 1];
    if (std::abs(h - c.graph().value(t)) > 0.5 * c.depth()) return kNegInf;
    double lb = 0.0;
    for (int j = 0; j < d_ - 1; ++j) {
        const double tau = t[j] / c.half_width();
        lb += 1.0 / (tau * tau - 1.0);
    }
    return lb;
}

std::vector<int> Atlas::covering_charts(const Vector& x) const {
    std::vector<int> out;
    for (int r = 0; r < chart_count(); ++r)
        if (log_bump(r, x) > kNegInf) out.push_back(r);
    return out;
}

Vector Atlas::partition_values(const Vector& x) const {
    Vector logs(chart_count());
    double mx = kNegInf;
    for (int r = 0; r < chart_count(); ++r) {
        logs[r] = log_bump(r, x);
        mx = std::max(mx, logs[r]);
    }
    if (mx == kNegInf)
        throw uncovered_boundary_error("point not covered by any chart of the atlas");
    // Normalized in log space; with at least one covering chart the values
    // sum to 1 exactly up to rounding, as Definition of the partition demands.
    Vector phi(chart_count());
    double z = 0.0;
    for (int r = 0; r < chart_count(); ++r) {
        phi[r] = logs[r] == kNegInf ? 0.0 : std::exp(logs[r] - mx);
        z += phi[r];
    }
    return phi / z;
}

double Atlas::partition_value(int r, const Vector& x) const {
    return partition_values(x)[r];
}

std::vector<Vector> sample_gamma_points(const Atlas& atlas, const GammaSubset& gamma,
                                        int count, Rng& rng) {
    if (gamma.empty()) throw std::invalid_argument("sample_gamma_points: Gamma is empty");
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    const int np = static_cast<int>(gamma.pieces.size());
    for (int i = 0; i < count; ++i) {
        const GammaPiece& piece = gamma.pieces[static_cast<std::size_t>(i % np)];
        Vector t(piece.lo.size());
        for (int j = 0; j < t.size(); ++j) t[j] = rng.uniform(piece.lo[j], piece.hi[j]);
        out.push_back(atlas.chart(piece.chart).boundary_point(t));
    }
    return out;
}

bool gamma_in_hyperplane(const Atlas& atlas, const GammaSubset& gamma, int samples) {
    Rng rng(0x5eedu);
    const auto pts = sample_gamma_points(atlas, gamma, samples, rng);
    const int d = atlas.dimension();
    Vector mean = Vector::Zero(d);
    for (const Vector& p : pts) mean += p;
    mean /= static_cast<double>(pts.size());
    Matrix centered(static_cast<Eigen::Index>(pts.size()), d);
    for (std::size_t i = 0; i < pts.size(); ++i) centered.row(static_cast<Eigen::Index>(i)) = (pts[i] - mean).transpose();
    Eigen::JacobiSVD<Matrix> svd(centered);
    const auto& sv = svd.singularValues();
    return sv[sv.size() - 1] <= 1e-10 * std::max(1.0, sv[0]);
}

// ---------------------------------------------------------------------------
// Regularity certificate
// ---------------------------------------------------------------------------

RegularityReport verify_regularity(const Chart& chart, int k, double mu,
                                   const RegularityGrid& grid, double bound) {
    if (chart.graph().domain_dimension() != 1)
        throw std::invalid_argument("verify_regularity: implemented for d == 2 charts");
    RegularityReport rep;
    rep.k = k;
    rep.mu = mu;
    rep.bound = bound;
    rep.quotients.assign(static_cast<std::size_t>(k) + 1, {});
    const double hw = chart.half_width();
    for (int order = 0; order <= k; ++order) {
        for (int level = 0; level < grid.levels; ++level) {
            const int n = grid.points << level;
            std::vector<double> ts, vs;
            ts.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = -hw + 2.0 * hw * static_cast<double>(i) / (n - 1);
                try {
                    const double v = chart.graph().derivative1d(t, order);
                    ts.push_back(t);
                    vs.push_back(v);
                } catch (const not_differentiable_error&) {
                    // kink points are skipped; the quotient is an a.e. statement
                }
            }
            double q = 0.0;
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = i + 1; j < ts.size(); ++j) {
                    const double dist = std::abs(ts[i] - ts[j]);
                    q = std::max(q, std::abs(vs[i] - vs[j]) / std::pow(dist, mu));
                }
            rep.quotients[static_cast<std::size_t>(order)].push_back(q);
        }
    }
    rep.pass = true;
    for (const auto& per_order : rep.quotients)
        if (!per_order.empty() && per_order.back() > bound) rep.pass = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Built-in atlases
// ---------------------------------------------------------------------------

namespace {

Matrix frame2(double t0, double t1, double h0, double h1) {
    Matrix q(2, 2);
    q << t0, h0, t1, h1;  // columns are the local axes in ambient coordinates
    return q;
}

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

constexpr double kSquareEdgeHalfWidth = 0.42;
constexpr double kSquareCornerHalfWidth = 0.26;
constexpr double kSquareDepth = 0.3;

}  // namespace

Atlas unit_square_atlas() {
    const double s = std::numbers::sqrt2_v<double> / 2.0;
    auto flat = std::make_shared<const FlatGraph>(1);
    auto wedge = std::make_shared<const WedgeGraph>(1.0);
    const RegularityClass smooth{9, 1.0};
    const RegularityClass lipschitz{0, 1.0};
    std::vector<Chart> charts;
    // Edge charts: bottom, right, top, left (indices 0..3).
    charts.emplace_back(frame2(1, 0, 0, 1), vec2(0.5, 0.0), kSquareEdgeHalfWidth, kSquareDepth,
                        flat, smooth);
    charts.emplace_back(frame2(0, 1, -1, 0), vec2(1.0, 0.5), kSquareEdgeHalfWidth, kSquareDepth,
                        flat, smooth);
    charts.emplace_back(frame2(-1, 0, 0, -1), vec2(0.5, 1.0), kSquareEdgeHalfWidth, kSquareDepth,
                        flat, smooth);
    charts.emplace_back(frame2(0, -1, 1, 0), vec2(0.0, 0.5), kSquareEdgeHalfWidth, kSquareDepth,
                        flat, smooth);
    // Corner charts in 45-degree frames (indices 4..7): (0,0), (1,0), (1,1), (0,1).
    charts.emplace_back(frame2(s, -s, s, s), vec2(0.0, 0.0), kSquareCornerHalfWidth, kSquareDepth,
                        wedge, lipschitz);
    charts.emplace_back(frame2(s, s, -s, s), vec2(1.0, 0.0), kSquareCornerHalfWidth, kSquareDepth,
                        wedge, lipschitz);
    charts.emplace_back(frame2(-s, s, -s, -s), vec2(1.0, 1.0), kSquareCornerHalfWidth,
                        kSquareDepth, wedge, lipschitz);
    charts.emplace_back(frame2(-s, -s, s, -s), vec2(0.0, 1.0), kSquareCornerHalfWidth,
                        kSquareDepth, wedge, lipschitz);
    return Atlas(2, std::move(charts));
}

Atlas disk_atlas(double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disk_atlas: radius must be positive");
    // Arcs of +-67.5 degrees around bottom/right/top/left give 45-degree overlaps.
    const double hw = radius * std::sin(3.0 * std::numbers::pi_v<double> / 8.0);
    const double depth = 0.3 * radius;
    auto arc = std::make_shared<const CircleGraph>(radius);
    const RegularityClass smooth{3, 1.0};
    std::vector<Chart> charts;
    charts.emplace_back(frame2(1, 0, 0, 1), vec2(0, 0), hw, depth, arc, smooth);    // bottom
    charts.emplace_back(frame2(0, 1, -1, 0), vec2(0, 0), hw, depth, arc, smooth);   // right
    charts.emplace_back(frame2(-1, 0, 0, -1), vec2(0, 0), hw, depth, arc, smooth);  // top
    charts.emplace_back(frame2(0, -1, 1, 0), vec2(0, 0), hw, depth, arc, smooth);   // left
    return Atlas(2, std::move(charts));
}

Atlas halfspace_patch(int dimension, double extent) {
    if (dimension < 2) throw std::invalid_argument("halfspace_patch: dimension must be >= 2");
    std::vector<Chart> charts;
    charts.emplace_back(Matrix::Identity(dimension, dimension), Vector::Zero(dimension), extent,
                        extent, std::make_shared<const FlatGraph>(dimension - 1),
                        RegularityClass{9, 1.0});
    return Atlas(dimension, std::move(charts));
}

Atlas flat_curve_atlas() {
    auto flat = std::make_shared<const FlatGraph>(1);
    const RegularityClass smooth{9, 1.0};
    std::vector<Chart> charts;
    charts.emplace_back(frame2(1, 0, 0, 1), vec2(-0.5, 0.0), 0.6, 0.4, flat, smooth);
    charts.emplace_back(frame2(1, 0, 0, 1), vec2(0.5, 0.0), 0.6, 0.4, flat, smooth);
    return Atlas(2, std::move(charts));
}

Atlas parabola_curve_atlas() {
    // Two disjoint parabolic patches; the second sits in a rotated frame.
    auto parabola = std::make_shared<const PolyGraph>(std::vector<double>{0.0, 0.0, 0.5});
    const RegularityClass c21{2, 1.0};
    std::vector<Chart> charts;
    charts.emplace_back(frame2(1, 0, 0, 1), vec2(0.0, 0.0), 1.0, 0.5, parabola, c21);
    charts.emplace_back(frame2(0, 1, -1, 0), vec2(4.0, 0.0), 1.0, 0.5, parabola, c21);
    return Atlas(2, std::move(charts));
}

namespace {

GammaPiece interval_piece(int chart, double lo, double hi) {
    return {chart, Vector::Constant(1, lo), Vector::Constant(1, hi)};
}

}  // namespace

GammaSubset square_bottom_edge(const Atlas&) {
    GammaSubset g;
    g.id = "square_bottom_edge";
    g.pieces.push_back(interval_piece(0, -kSquareEdgeHalfWidth, kSquareEdgeHalfWidth));
    g.pieces.push_back(interval_piece(4, 0.0, kSquareCornerHalfWidth));
    g.pieces.push_back(interval_piece(5, -kSquareCornerHalfWidth, 0.0));
    return g;
}

GammaSubset square_left_edge(const Atlas&) {
    GammaSubset g;
    g.id = "square_left_edge";
    g.pieces.push_back(interval_piece(3, -kSquareEdgeHalfWidth, kSquareEdgeHalfWidth));
    g.pieces.push_back(interval_piece(4, -kSquareCornerHalfWidth, 0.0));
    g.pieces.push_back(interval_piece(7, 0.0, kSquareCornerHalfWidth));
    return g;
}

// ---------------------------------------------------------------------------
// Atlas description file
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const GraphFunction> parse_graph(std::istringstream& is, int graph_dim) {
    std::string family;
    is >> family;
    if (family == "flat") {
        double level = 0.0;
        is >> level;
        return std::make_shared<const FlatGraph>(graph_dim, level);
    }
    if (family == "affine") {
        double level;
        if (!(is >> level)) throw std::invalid_argument("atlas file: affine needs a level");
        std::vector<double> gs;
        double g;
        while (is >> g) gs.push_back(g);
        if (static_cast<int>(gs.size()) != graph_dim)
            throw std::invalid_argument("atlas file: affine slope dimension mismatch");
        Vector slope(graph_dim);
        for (int i = 0; i < graph_dim; ++i) slope[i] = gs[static_cast<std::size_t>(i)];
        return std::make_shared<const AffineGraph>(slope, level);
    }
    if (graph_dim != 1)
        throw std::invalid_argument("atlas file: family '" + family + "' requires d == 2");
    if (family == "poly") {
        std::vector<double> cs;
        double c;
        while (is >> c) cs.push_back(c);
        if (cs.empty()) throw std::invalid_argument("atlas file: poly needs coefficients");
        return std::make_shared<const PolyGraph>(cs);
    }
    if (family == "wedge") {
        double slope;
        if (!(is >> slope)) throw std::invalid_argument("atlas file: wedge needs a slope");
        return std::make_shared<const WedgeGraph>(slope);
    }
    if (family == "circle") {
        double radius;
        if (!(is >> radius)) throw std::invalid_argument("atlas file: circle needs a radius");
        return std::make_shared<const CircleGraph>(radius);
    }
    throw std::invalid_argument("atlas file: unknown graph family '" + family + "'");
}

}  // namespace

Atlas load_atlas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open atlas file: " + path);
    int d = 0;
    std::vector<Chart> charts;
    std::string line;
    bool in_chart = false;
    Matrix rotation;
    Vector offset;
    double half_width = 0.0, depth = 0.0;
    RegularityClass declared{0, 1.0};
    std::shared_ptr<const GraphFunction> graph;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        if (key == "dimension") {
            if (!(is >> d) || d < 2) throw std::invalid_argument("atlas file: bad dimension");
        } else if (key == "chart") {
            if (d == 0) throw std::invalid_argument("atlas file: dimension must come first");
            in_chart = true;
            rotation = Matrix::Identity(d, d);
            offset = Vector::Zero(d);
            half_width = depth = 0.0;
            declared = {0, 1.0};
            graph.reset();
        } else if (!in_chart) {
            throw std::invalid_argument("atlas file: '" + key + "' outside a chart block");
        } else if (key == "rotation") {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (!(is >> rotation(i, j)))
                        throw std::invalid_argument("atlas file: rotation needs d*d entries");
        } else if (key == "offset") {
            for (int i = 0; i < d; ++i)
                if (!(is >> offset[i]))
                    throw std::invalid_argument("atlas file: offset needs d entries");
        } else if (key == "half_width") {
            is >> half_width;
        } else if (key == "depth") {
            is >> depth;
        } else if (key == "class") {
            is >> declared.k >> declared.mu;
        } else if (key == "graph") {
            graph = parse_graph(is, d - 1);
        } else if (key == "end") {
            if (!graph) throw std::invalid_argument("atlas file: chart without a graph");
            charts.emplace_back(rotation, offset, half_width, depth, graph, declared);
            in_chart = false;
        } else {
            throw std::invalid_argument("atlas file: unknown key '" + key + "'");
        }
    }
    if (in_chart) throw std::invalid_argument("atlas file: unterminated chart block");
    if (d == 0 || charts.empty()) throw std::invalid_argument("atlas file: no charts");
    return Atlas(d, std::move(charts));
}

void save_atlas(const Atlas& atlas, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write atlas file: " + path);
    out.precision(17);
    const int d = atlas.dimension();
    out << "dimension " << d << "\n";
    for (const Chart& c : atlas.charts()) {
        const std::string spec = c.graph().file_spec();
        if (spec.empty())
            throw std::invalid_argument("save_atlas: chart graph not expressible in the file grammar");
        out << "chart\n";
        out << "rotation";
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out << ' ' << c.rotation()(i, j);
        out << "\noffset";
        for (int i = 0; i < d; ++i) out << ' ' << c.offset()[i];
        out << "\nhalf_width " << c.half_width() << "\n";
        out << "depth " << c.depth() << "\n";
        out << "class " << c.declared_class().k << ' ' << c.declared_class().mu << "\n";
        out << "graph " << spec << "\n";
        out << "end\n";
    }
}

}  // namespace sobnorm
