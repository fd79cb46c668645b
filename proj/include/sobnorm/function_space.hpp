#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sobnorm/atlas.hpp"
#include "sobnorm/common.hpp"
#include "sobnorm/multiindex.hpp"

namespace sobnorm {

/// Where a test function may be nonzero.
struct Support {
    enum class Kind { whole_domain, ball, box };
    Kind kind = Kind::whole_domain;
    Vector center;      // ball
    double radius = 0;  // ball
    Vector lo, hi;      // box

    static Support whole() { return {}; }
    static Support ball(Vector c, double r) {
        Support s;
        s.kind = Kind::ball;
        s.center = std::move(c);
        s.radius = r;
        return s;
    }
    static Support box(Vector lo, Vector hi) {
        Support s;
        s.kind = Kind::box;
        s.lo = std::move(lo);
        s.hi = std::move(hi);
        return s;
    }

    bool contains(const Vector& x) const;
};

/// A scalar field with exact partial-derivative oracles. Implementations are
/// immutable and pure; evaluation is thread-safe by construction.
class FieldImpl : public std::enable_shared_from_this<FieldImpl> {
public:
    virtual ~FieldImpl() = default;
    virtual int dimension() const = 0;
    virtual int max_order() const = 0;
    virtual Complex value(const Vector& x) const = 0;
    virtual Complex derivative(const MultiIndex& alpha, const Vector& x) const = 0;

    /// A field whose value oracle is this field's alpha-derivative. The
    /// default wraps; concrete fields override with closed forms.
    virtual std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const;

    virtual Support support() const { return Support::whole(); }
};

class TestFunction {
public:
    TestFunction() = default;
    TestFunction(std::shared_ptr<const FieldImpl> impl, std::string id)
        : impl_(std::move(impl)), id_(std::move(id)) {}

    bool valid() const { return impl_ != nullptr; }
    int dimension() const { return impl_->dimension(); }
    int max_order() const { return impl_->max_order(); }
    Complex operator()(const Vector& x) const { return impl_->value(x); }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const {
        return impl_->derivative(alpha, x);
    }
    Support support() const { return impl_->support(); }
    const std::string& id() const { return id_; }
    const std::shared_ptr<const FieldImpl>& impl() const { return impl_; }

private:
    std::shared_ptr<const FieldImpl> impl_;
    std::string id_;
};

/// d^alpha u as a TestFunction of max_order K - |alpha|.
TestFunction derive(const TestFunction& u, const MultiIndex& alpha);

// Concrete fields -----------------------------------------------------------

TestFunction make_polynomial_function(Polynomial p, std::string id = "poly");
TestFunction make_constant_function(int dimension, Complex value, std::string id = "const");

/// Convenience monomial x^beta.
TestFunction make_monomial(const MultiIndex& beta, std::string id = "");

struct TrigTerm {
    double amplitude;
    Vector frequency;
    double phase;
};
TestFunction make_trig_function(std::vector<TrigTerm> terms, int dimension,
                                std::string id = "trig");

TestFunction make_gaussian_bump(double amplitude, Vector center, double sigma,
                                std::string id = "gauss");

/// amplitude * exp(1/(|x-c|^2/rho^2 - 1)) inside the ball, 0 outside; smooth
/// on all of R^d with support exactly the closed ball.
TestFunction make_mollifier_bump(double amplitude, Vector center, double rho,
                                 std::string id = "mollifier");

TestFunction make_product(const TestFunction& f, const TestFunction& g, std::string id = "");
TestFunction make_linear_combination(std::vector<std::pair<Complex, TestFunction>> terms,
                                     std::string id = "lincomb");

// Seeded families ------------------------------------------------------------

enum class FamilyKind { polynomial, trigonometric, gaussian_bump, mollifier_bump, complex_pair };

FamilyKind family_kind_from_string(const std::string& s);
std::string to_string(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::polynomial;
    int degree = 3;  // polynomial total degree / trigonometric frequency bound
    int count = 10;
    std::uint64_t seed = 1;

    std::string describe() const;
};

struct DomainHints {
    int dimension = 2;
    Vector box_lo, box_hi;
    /// Mollifier centers may dip below the last coordinate's zero plane (the
    /// compact-support half-space setting); balls stay inside the hint box
    /// ball.
    bool halfspace_support = false;
};

DomainHints unit_square_hints();
DomainHints box_hints(const Vector& lo, const Vector& hi);
DomainHints halfspace_hints(int dimension, double delta);

/// Deterministic: equal specs produce bit-identical families.
std::vector<TestFunction> generate_family(const FamilySpec& spec, const DomainHints& hints);

/// Members multiplied by a smooth cutoff vanishing on Gamma; the result lies
/// in W^{1,p}_Gamma for the sampled-boundary notion used throughout.
std::vector<TestFunction> restrict_to_zero_on(const std::vector<TestFunction>& family,
                                              const GammaSubset& gamma,
                                              const TestFunction& cutoff);

/// Linear cutoff vanishing on the line/plane {x_axis = level}.
TestFunction coordinate_cutoff(int dimension, int axis, double level,
                               std::string id = "cutoff");

}  // namespace sobnorm
