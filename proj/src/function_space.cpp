#include "sobnorm/function_space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sobnorm {

bool Support::contains(const Vector& x) const {
    switch (kind) {
        case Kind::whole_domain: return true;
        case Kind::ball: return (x - center).norm() <= radius;
        case Kind::box: return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
    }
    return true;
}

// ---------------------------------------------------------------------------
// Field implementations
// ---------------------------------------------------------------------------

namespace {

class DerivShiftedField final : public FieldImpl {
public:
    DerivShiftedField(std::shared_ptr<const FieldImpl> parent, MultiIndex shift)
        : parent_(std::move(parent)), shift_(std::move(shift)) {}

    int dimension() const override { return parent_->dimension(); }
    int max_order() const override { return parent_->max_order() - order(shift_); }
    Complex value(const Vector& x) const override { return parent_->derivative(shift_, x); }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        return parent_->derivative(shift_ + alpha, x);
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        return std::make_shared<DerivShiftedField>(parent_, shift_ + alpha);
    }
    Support support() const override { return parent_->support(); }

private:
    std::shared_ptr<const FieldImpl> parent_;
    MultiIndex shift_;
};

class PolynomialField final : public FieldImpl {
public:
    explicit PolynomialField(Polynomial p) : p_(std::move(p)) {}

    int dimension() const override { return p_.dimension(); }
    int max_order() const override { return 99; }
    Complex value(const Vector& x) const override { return Complex(p_(x), 0.0); }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        return Complex(polynomial_derivative(p_, alpha)(x), 0.0);
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        return std::make_shared<PolynomialField>(polynomial_derivative(p_, alpha));
    }
    const Polynomial& poly() const { return p_; }

private:
    Polynomial p_;
};

class TrigField final : public FieldImpl {
public:
    TrigField(std::vector<TrigTerm> terms, int dimension)
        : terms_(std::move(terms)), d_(dimension) {}

    int dimension() const override { return d_; }
    int max_order() const override { return 99; }
    Complex value(const Vector& x) const override {
        double v = 0.0;
        for (const TrigTerm& t : terms_) v += t.amplitude * std::sin(t.frequency.dot(x) + t.phase);
        return Complex(v, 0.0);
    }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        double v = 0.0;
        const double shift = order(alpha) * std::numbers::pi_v<double> / 2.0;
        for (const TrigTerm& t : terms_) {
            double amp = t.amplitude;
            for (int i = 0; i < d_; ++i)
                for (int e = 0; e < alpha[i]; ++e) amp *= t.frequency[i];
            v += amp * std::sin(t.frequency.dot(x) + t.phase + shift);
        }
        return Complex(v, 0.0);
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        std::vector<TrigTerm> out = terms_;
        const double shift = order(alpha) * std::numbers::pi_v<double> / 2.0;
        for (TrigTerm& t : out) {
            for (int i = 0; i < d_; ++i)
                for (int e = 0; e < alpha[i]; ++e) t.amplitude *= t.frequency[i];
            t.phase += shift;
        }
        return std::make_shared<TrigField>(std::move(out), d_);
    }

private:
    std::vector<TrigTerm> terms_;
    int d_;
};

/// amplitude * pre(x) * exp(-|x-c|^2 / (2 sigma^2)); derivatives fold the
/// chain-rule factor into the polynomial prefactor.
class GaussianBumpField final : public FieldImpl {
public:
    GaussianBumpField(double amplitude, Vector center, double sigma, Polynomial pre)
        : amp_(amplitude), c_(std::move(center)), sigma_(sigma), pre_(std::move(pre)) {}

    static std::shared_ptr<const GaussianBumpField> base(double amplitude, Vector center,
                                                         double sigma) {
        const int d = static_cast<int>(center.size());
        return std::make_shared<GaussianBumpField>(amplitude, std::move(center), sigma,
                                                   Polynomial::constant(d, 1.0));
    }

    int dimension() const override { return static_cast<int>(c_.size()); }
    int max_order() const override { return 99; }
    Complex value(const Vector& x) const override {
        const double q = (x - c_).squaredNorm() / (2.0 * sigma_ * sigma_);
        return Complex(amp_ * pre_(x) * std::exp(-q), 0.0);
    }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        return derived(alpha)->value(x);
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        Polynomial pre = pre_;
        const int d = dimension();
        for (int i = 0; i < d; ++i)
            for (int e = 0; e < alpha[i]; ++e) pre = differentiate_once(pre, i);
        return std::make_shared<GaussianBumpField>(amp_, c_, sigma_, std::move(pre));
    }

private:
    Polynomial differentiate_once(const Polynomial& pre, int axis) const {
        // (pre * G)' = (pre' - pre * (x_i - c_i)/sigma^2) * G
        const int d = dimension();
        Polynomial linear(d);
        linear.set(MultiIndex::unit(d, axis), -1.0 / (sigma_ * sigma_));
        linear.set(MultiIndex::zero(d), c_[axis] / (sigma_ * sigma_));
        return polynomial_derivative(pre, MultiIndex::unit(d, axis)) + pre * linear;
    }

    double amp_;
    Vector c_;
    double sigma_;
    Polynomial pre_;
};

/// amplitude * num(x) * (q-1)^{-m} * exp(1/(q-1)), q = |x-c|^2/rho^2, inside
/// the ball; identically zero outside. Derivatives stay in this closed family.
class MollifierBumpField final : public FieldImpl {
public:
    MollifierBumpField(double amplitude, Vector center, double rho, Polynomial num, int denom_pow)
        : amp_(amplitude), c_(std::move(center)), rho_(rho), num_(std::move(num)), m_(denom_pow) {}

    static std::shared_ptr<const MollifierBumpField> base(double amplitude, Vector center,
                                                          double rho) {
        const int d = static_cast<int>(center.size());
        return std::make_shared<MollifierBumpField>(amplitude, std::move(center), rho,
                                                    Polynomial::constant(d, 1.0), 0);
    }

    int dimension() const override { return static_cast<int>(c_.size()); }
    int max_order() const override { return 99; }
    Complex value(const Vector& x) const override {
        const double q = (x - c_).squaredNorm() / (rho_ * rho_);
        if (q >= 1.0 - 1e-14) return Complex(0.0, 0.0);
        const double s = 1.0 / (q - 1.0);
        if (s < -700.0) return Complex(0.0, 0.0);
        return Complex(amp_ * num_(x) * std::pow(q - 1.0, -m_) * std::exp(s), 0.0);
    }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        return derived(alpha)->value(x);
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        Polynomial num = num_;
        int m = m_;
        const int d = dimension();
        for (int i = 0; i < d; ++i)
            for (int e = 0; e < alpha[i]; ++e) differentiate_once(num, m, i);
        return std::make_shared<MollifierBumpField>(amp_, c_, rho_, std::move(num), m);
    }
    Support support() const override { return Support::ball(c_, rho_); }

private:
    void differentiate_once(Polynomial& num, int& m, int axis) const {
        // d_j [N (q-1)^{-m} E] = [N' (q-1)^2 - m N q_j (q-1) - N q_j] (q-1)^{-m-2} E
        const int d = dimension();
        Polynomial qm1(d);  // q - 1
        for (int i = 0; i < d; ++i) {
            Polynomial sq(d);
            sq.set(MultiIndex::unit(d, i) + MultiIndex::unit(d, i), 1.0 / (rho_ * rho_));
            sq.set(MultiIndex::unit(d, i), -2.0 * c_[i] / (rho_ * rho_));
            sq.set(MultiIndex::zero(d), c_[i] * c_[i] / (rho_ * rho_));
            qm1 = qm1 + sq;
        }
        qm1.set(MultiIndex::zero(d), qm1.coefficient(MultiIndex::zero(d)) - 1.0);
        Polynomial qj(d);  // d_j q
        qj.set(MultiIndex::unit(d, axis), 2.0 / (rho_ * rho_));
        qj.set(MultiIndex::zero(d), -2.0 * c_[axis] / (rho_ * rho_));
        const Polynomial nprime = polynomial_derivative(num, MultiIndex::unit(d, axis));
        num = nprime * qm1 * qm1 + (num * qj * qm1).scaled(-static_cast<double>(m)) +
              (num * qj).scaled(-1.0);
        m += 2;
    }

    double amp_;
    Vector c_;
    double rho_;
    Polynomial num_;
    int m_;
};

class ProductField final : public FieldImpl {
public:
    ProductField(std::shared_ptr<const FieldImpl> f, std::shared_ptr<const FieldImpl> g)
        : f_(std::move(f)), g_(std::move(g)) {
        if (f_->dimension() != g_->dimension())
            throw std::invalid_argument("ProductField: dimension mismatch");
    }

    int dimension() const override { return f_->dimension(); }
    int max_order() const override { return std::min(f_->max_order(), g_->max_order()); }
    Complex value(const Vector& x) const override { return f_->value(x) * g_->value(x); }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        // Leibniz over beta <= alpha.
        Complex acc(0.0, 0.0);
        const int d = dimension();
        std::vector<MultiIndex> betas = lower_set(alpha, d);
        for (const MultiIndex& beta : betas) {
            const double c = static_cast<double>(binom(alpha, beta));
            acc += c * f_->derivative(beta, x) * g_->derivative(alpha.minus(beta), x);
        }
        return acc;
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override;

    Support support() const override {
        // Intersection would be tighter; the smaller factor support suffices.
        const Support sf = f_->support();
        return sf.kind == Support::Kind::whole_domain ? g_->support() : sf;
    }

private:
    static std::vector<MultiIndex> lower_set(const MultiIndex& alpha, int d) {
        std::vector<MultiIndex> out;
        Eigen::VectorXi cur = Eigen::VectorXi::Zero(d);
        while (true) {
            out.emplace_back(cur);
            int i = d - 1;
            while (i >= 0 && cur[i] == alpha[i]) cur[i--] = 0;
            if (i < 0) break;
            ++cur[i];
        }
        return out;
    }

    std::shared_ptr<const FieldImpl> f_, g_;
};

class LinearCombinationField final : public FieldImpl {
public:
    using Term = std::pair<Complex, std::shared_ptr<const FieldImpl>>;

    explicit LinearCombinationField(std::vector<Term> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("LinearCombinationField: empty");
        for (const Term& t : terms_)
            if (t.second->dimension() != terms_[0].second->dimension())
                throw std::invalid_argument("LinearCombinationField: dimension mismatch");
    }

    int dimension() const override { return terms_[0].second->dimension(); }
    int max_order() const override {
        int k = 99;
        for (const Term& t : terms_) k = std::min(k, t.second->max_order());
        return k;
    }
    Complex value(const Vector& x) const override {
        Complex acc(0.0, 0.0);
        for (const Term& t : terms_) acc += t.first * t.second->value(x);
        return acc;
    }
    Complex derivative(const MultiIndex& alpha, const Vector& x) const override {
        Complex acc(0.0, 0.0);
        for (const Term& t : terms_) acc += t.first * t.second->derivative(alpha, x);
        return acc;
    }
    std::shared_ptr<const FieldImpl> derived(const MultiIndex& alpha) const override {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) out.emplace_back(t.first, t.second->derived(alpha));
        return std::make_shared<LinearCombinationField>(std::move(out));
    }

private:
    std::vector<Term> terms_;
};

std::shared_ptr<const FieldImpl> ProductField::derived(const MultiIndex& alpha) const {
    if (order(alpha) == 0) return shared_from_this();
    std::vector<LinearCombinationField::Term> terms;
    for (const MultiIndex& beta : lower_set(alpha, dimension())) {
        const double c = static_cast<double>(binom(alpha, beta));
        terms.emplace_back(Complex(c, 0.0),
                           std::make_shared<ProductField>(f_->derived(beta),
                                                          g_->derived(alpha.minus(beta))));
    }
    return std::make_shared<LinearCombinationField>(std::move(terms));
}

}  // namespace

std::shared_ptr<const FieldImpl> FieldImpl::derived(const MultiIndex& alpha) const {
    if (order(alpha) == 0) return shared_from_this();
    return std::make_shared<DerivShiftedField>(shared_from_this(), alpha);
}

TestFunction derive(const TestFunction& u, const MultiIndex& alpha) {
    if (alpha.dimension() != u.dimension())
        throw std::invalid_argument("derive: dimension mismatch");
    if (order(alpha) > u.max_order())
        throw regularity_error("derive: derivative order exceeds the function's max_order");
    if (order(alpha) == 0) return u;
    return TestFunction(u.impl()->derived(alpha), u.id() + "_d" + alpha.to_string());
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

TestFunction make_polynomial_function(Polynomial p, std::string id) {
    return TestFunction(std::make_shared<PolynomialField>(std::move(p)), std::move(id));
}

TestFunction make_constant_function(int dimension, Complex value, std::string id) {
    if (value.imag() == 0.0)
        return make_polynomial_function(Polynomial::constant(dimension, value.real()),
                                        std::move(id));
    std::vector<std::pair<Complex, TestFunction>> terms;
    terms.emplace_back(value, make_polynomial_function(Polynomial::constant(dimension, 1.0)));
    return make_linear_combination(std::move(terms), std::move(id));
}

TestFunction make_monomial(const MultiIndex& beta, std::string id) {
    Polynomial p(beta.dimension());
    p.set(beta, 1.0);
    if (id.empty()) id = "x^" + beta.to_string();
    return make_polynomial_function(std::move(p), std::move(id));
}

TestFunction make_trig_function(std::vector<TrigTerm> terms, int dimension, std::string id) {
    return TestFunction(std::make_shared<TrigField>(std::move(terms), dimension), std::move(id));
}

TestFunction make_gaussian_bump(double amplitude, Vector center, double sigma, std::string id) {
    return TestFunction(GaussianBumpField::base(amplitude, std::move(center), sigma),
                        std::move(id));
}

TestFunction make_mollifier_bump(double amplitude, Vector center, double rho, std::string id) {
    return TestFunction(MollifierBumpField::base(amplitude, std::move(center), rho),
                        std::move(id));
}

TestFunction make_product(const TestFunction& f, const TestFunction& g, std::string id) {
    if (id.empty()) id = f.id() + "*" + g.id();
    return TestFunction(std::make_shared<ProductField>(f.impl(), g.impl()), std::move(id));
}

TestFunction make_linear_combination(std::vector<std::pair<Complex, TestFunction>> terms,
                                     std::string id) {
    std::vector<LinearCombinationField::Term> impl_terms;
    impl_terms.reserve(terms.size());
    for (auto& [c, f] : terms) impl_terms.emplace_back(c, f.impl());
    return TestFunction(std::make_shared<LinearCombinationField>(std::move(impl_terms)),
                        std::move(id));
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "polynomial") return FamilyKind::polynomial;
    if (s == "trigonometric") return FamilyKind::trigonometric;
    if (s == "gaussian_bump") return FamilyKind::gaussian_bump;
    if (s == "mollifier_bump") return FamilyKind::mollifier_bump;
    if (s == "complex_pair") return FamilyKind::complex_pair;
    throw std::invalid_argument("unknown family kind: " + s);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::polynomial: return "polynomial";
        case FamilyKind::trigonometric: return "trigonometric";
        case FamilyKind::gaussian_bump: return "gaussian_bump";
        case FamilyKind::mollifier_bump: return "mollifier_bump";
        case FamilyKind::complex_pair: return "complex_pair";
    }
    return "?";
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    os << to_string(kind) << "(degree=" << degree << ",count=" << count << ",seed=" << seed << ")";
    return os.str();
}

DomainHints unit_square_hints() {
    DomainHints h;
    h.dimension = 2;
    h.box_lo = Vector::Zero(2);
    h.box_hi = Vector::Ones(2);
    return h;
}

DomainHints box_hints(const Vector& lo, const Vector& hi) {
    DomainHints h;
    h.dimension = static_cast<int>(lo.size());
    h.box_lo = lo;
    h.box_hi = hi;
    return h;
}

DomainHints halfspace_hints(int dimension, double delta) {
    DomainHints h;
    h.dimension = dimension;
    h.box_lo = Vector::Constant(dimension, -delta);
    h.box_lo[dimension - 1] = 0.0;
    h.box_hi = Vector::Constant(dimension, delta);
    h.halfspace_support = true;
    return h;
}

namespace {

Polynomial random_polynomial(int d, int degree, Rng& rng) {
    Polynomial p(d);
    for (const MultiIndex& beta : enumerate_indices(d, degree, EnumerationMode::up_to))
        p.set(beta, rng.uniform(-1.0, 1.0));
    return p;
}

std::string member_id(const FamilySpec& spec, int i) {
    std::ostringstream os;
    os << to_string(spec.kind) << "_s" << spec.seed << "_" << i;
    return os.str();
}

}  // namespace

std::vector<TestFunction> generate_family(const FamilySpec& spec, const DomainHints& hints) {
    if (spec.count < 1) throw std::invalid_argument("generate_family: count must be >= 1");
    if (spec.degree < 0) throw std::invalid_argument("generate_family: degree must be >= 0");
    const int d = hints.dimension;
    Rng rng(spec.seed);
    std::vector<TestFunction> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    const double min_extent = (hints.box_hi - hints.box_lo).minCoeff();
    for (int i = 0; i < spec.count; ++i) {
        switch (spec.kind) {
            case FamilyKind::polynomial: {
                out.push_back(TestFunction(
                    std::make_shared<PolynomialField>(random_polynomial(d, spec.degree, rng)),
                    member_id(spec, i)));
                break;
            }
            case FamilyKind::trigonometric: {
                std::vector<TrigTerm> terms;
                for (int t = 0; t < 3; ++t) {
                    Vector freq(d);
                    bool nonzero = false;
                    for (int j = 0; j < d; ++j) {
                        const int k = static_cast<int>(rng.next_below(
                                          static_cast<std::uint64_t>(2 * spec.degree + 1))) -
                                      spec.degree;
                        freq[j] = std::numbers::pi_v<double> * k;
                        nonzero = nonzero || k != 0;
                    }
                    if (!nonzero) freq[0] = std::numbers::pi_v<double>;
                    terms.push_back({rng.uniform(-1.0, 1.0), freq, rng.uniform(0.0, 2.0 * std::numbers::pi_v<double>)});
                }
                out.push_back(make_trig_function(std::move(terms), d, member_id(spec, i)));
                break;
            }
            case FamilyKind::gaussian_bump: {
                Vector center(d);
                for (int j = 0; j < d; ++j) center[j] = rng.uniform(hints.box_lo[j], hints.box_hi[j]);
                const double sigma = rng.uniform(0.15, 0.35) * min_extent;
                const double amp = (rng.next_double() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.25, 1.0);
                out.push_back(make_gaussian_bump(amp, std::move(center), sigma, member_id(spec, i)));
                break;
            }
            case FamilyKind::mollifier_bump: {
                const double delta = min_extent;
                double rho;
                Vector center(d);
                if (hints.halfspace_support) {
                    rho = rng.uniform(0.10, 0.25) * delta;
                    for (int j = 0; j < d - 1; ++j) center[j] = rng.uniform(-0.3, 0.3) * delta;
                    // Depths span full balls down to thin caps over the plane.
                    center[d - 1] = rng.uniform(-0.8, 1.2) * rho;
                } else {
                    rho = rng.uniform(0.10, 0.25) * min_extent;
                    for (int j = 0; j < d; ++j)
                        center[j] = rng.uniform(hints.box_lo[j] + rho, hints.box_hi[j] - rho);
                }
                const double amp = (rng.next_double() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.25, 1.0);
                out.push_back(make_mollifier_bump(amp, std::move(center), rho, member_id(spec, i)));
                break;
            }
            case FamilyKind::complex_pair: {
                auto re = std::make_shared<PolynomialField>(random_polynomial(d, spec.degree, rng));
                auto im = std::make_shared<PolynomialField>(random_polynomial(d, spec.degree, rng));
                std::vector<std::pair<Complex, TestFunction>> terms;
                terms.emplace_back(Complex(1.0, 0.0), TestFunction(re, "re"));
                terms.emplace_back(Complex(0.0, 1.0), TestFunction(im, "im"));
                out.push_back(make_linear_combination(std::move(terms), member_id(spec, i)));
                break;
            }
        }
    }
    return out;
}

std::vector<TestFunction> restrict_to_zero_on(const std::vector<TestFunction>& family,
                                              const GammaSubset& gamma,
                                              const TestFunction& cutoff) {
    if (gamma.empty()) throw std::invalid_argument("restrict_to_zero_on: Gamma is empty");
    std::vector<TestFunction> out;
    out.reserve(family.size());
    for (const TestFunction& u : family)
        out.push_back(make_product(u, cutoff, u.id() + "_zero_" + gamma.id));
    return out;
}

TestFunction coordinate_cutoff(int dimension, int axis, double level, std::string id) {
    Polynomial p(dimension);
    p.set(MultiIndex::unit(dimension, axis), 1.0);
    p.set(MultiIndex::zero(dimension), -level);
    return make_polynomial_function(std::move(p), std::move(id));
}

}  // namespace sobnorm
