#pragma once

#include <numbers>
#include <string>

#include "sobnorm/common.hpp"
#include "sobnorm/quadrature.hpp"

namespace sobnorm {

/// Integration domain for the interior norms: an axis-aligned box or a disk.
/// Disk integrals run in polar coordinates (Gauss in r, trapezoid in the
/// periodic angle), which is exact for polynomial integrands of moderate
/// degree just like the tensor rule on boxes.
struct DomainSpec {
    enum class Kind { box, disk };
    Kind kind = Kind::box;
    Box box;
    Vector center;
    double radius = 1.0;
    std::string id = "box";

    int dimension() const {
        return kind == Kind::box ? box.dimension() : static_cast<int>(center.size());
    }

    double measure() const {
        if (kind == Kind::box) return box.volume();
        return std::numbers::pi_v<double> * radius * radius;
    }

    static DomainSpec unit_square() {
        DomainSpec d;
        d.kind = Kind::box;
        d.box = box2d(0.0, 0.0, 1.0, 1.0);
        d.id = "unit_square";
        return d;
    }

    static DomainSpec unit_interval() {
        DomainSpec d;
        d.kind = Kind::box;
        d.box = box1d(0.0, 1.0);
        d.id = "unit_interval";
        return d;
    }

    static DomainSpec from_box(Box b, std::string id = "box") {
        DomainSpec d;
        d.kind = Kind::box;
        d.box = std::move(b);
        d.id = std::move(id);
        return d;
    }

    static DomainSpec disk(Vector center, double radius, std::string id = "disk") {
        DomainSpec d;
        d.kind = Kind::disk;
        d.center = std::move(center);
        d.radius = radius;
        d.id = std::move(id);
        return d;
    }
};

template <typename F>
auto integrate_domain(F&& f, const DomainSpec& domain, const QuadratureSpec& q)
    -> decltype(f(std::declval<const Vector&>())) {
    using T = decltype(f(std::declval<const Vector&>()));
    if (domain.kind == DomainSpec::Kind::box) return integrate_cube(f, domain.box, q);
    if (domain.center.size() != 2)
        throw std::invalid_argument("integrate_domain: disk quadrature requires d == 2");
    std::vector<double> rn, rw;
    gauss_nodes_1d(q.points_per_axis, q.panels, 0.0, domain.radius, rn, rw);
    const int ntheta = 2 * q.points_per_axis * q.panels;
    const double dtheta = 2.0 * std::numbers::pi_v<double> / ntheta;
    std::vector<T> values;
    values.reserve(rn.size() * static_cast<std::size_t>(ntheta));
    Vector x(2);
    for (std::size_t i = 0; i < rn.size(); ++i) {
        for (int j = 0; j < ntheta; ++j) {
            const double theta = dtheta * (static_cast<double>(j) + 0.5);
            x[0] = domain.center[0] + rn[i] * std::cos(theta);
            x[1] = domain.center[1] + rn[i] * std::sin(theta);
            T v = f(x);
            using std::abs;
            if (!std::isfinite(abs(v)))
                throw std::domain_error("integrate_domain: non-finite integrand value at a node");
            values.push_back((rw[i] * rn[i] * dtheta) * v);
        }
    }
    return pairwise_sum<T>(values);
}

}  // namespace sobnorm
