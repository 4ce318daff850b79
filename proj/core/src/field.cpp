#include <swan/field.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <swan/errors.hpp>

namespace swan {

namespace {

bool is_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e)
{
    std::uint64_t r = 1;
    while (e-- != 0) {
        r *= b;
    }
    return r;
}

} // namespace

std::shared_ptr<const FieldConfig> FieldConfig::make(fp::Coeff p, std::vector<std::string> basis_vars,
                                                     std::vector<std::string> perfection_vars, bool perfected)
{
    if (!fp::is_prime(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > (1U << 20)) {
        throw std::invalid_argument("characteristic too large");
    }
    if (!perfected && !perfection_vars.empty()) {
        throw std::invalid_argument("perfection variables require a perfected field");
    }
    std::set<std::string> seen;
    for (const auto *list : {&basis_vars, &perfection_vars}) {
        for (const auto &v : *list) {
            if (!is_identifier(v) || v == "t" || v == "O") {
                throw std::invalid_argument("invalid variable name '" + v + "'");
            }
            if (!seen.insert(v).second) {
                throw std::invalid_argument("duplicate variable name '" + v + "'");
            }
        }
    }
    auto cfg = std::make_shared<FieldConfig>();
    cfg->p = p;
    cfg->basis_vars = std::move(basis_vars);
    cfg->perfection_vars = std::move(perfection_vars);
    cfg->perfected = perfected;
    return cfg;
}

const std::string &FieldConfig::var_name(std::size_t i) const
{
    return i < basis_vars.size() ? basis_vars.at(i) : perfection_vars.at(i - basis_vars.size());
}

std::optional<std::size_t> FieldConfig::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < num_vars(); ++i) {
        if (var_name(i) == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::string> FieldConfig::differential_vars() const
{
    return perfected ? std::vector<std::string>{} : basis_vars;
}

bool same_field(const FieldPtr &a, const FieldPtr &b) noexcept
{
    return a == b || (a && b && *a == *b);
}

ResidueElement::ResidueElement(FieldPtr field)
    : field_(std::move(field)), num_(field_->p, field_->num_vars()),
      den_(Polynomial::constant(field_->p, field_->num_vars(), 1))
{
}

ResidueElement::ResidueElement(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)), scale_(scale)
{
}

ResidueElement ResidueElement::make(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale)
{
    if (den.is_zero()) {
        throw ZeroDenominator();
    }
    if (scale != 0 && !field->perfected) {
        throw std::invalid_argument("nonzero scale in an unperfected field");
    }
    if (num.is_zero()) {
        return ResidueElement(std::move(field));
    }
    if (!den.is_constant() && !num.is_constant()) {
        const Polynomial g = gcd(num, den);
        if (!g.is_one()) {
            num = *divide_exact(num, g);
            den = *divide_exact(den, g);
        }
    }
    ResidueElement r(std::move(field), std::move(num), std::move(den), scale);
    r.finish();
    return r;
}

ResidueElement rf_normalize(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale)
{
    return ResidueElement::make(std::move(field), std::move(num), std::move(den), scale);
}

ResidueElement ResidueElement::constant(FieldPtr field, std::int64_t c)
{
    const auto p = field->p;
    const auto n = field->num_vars();
    return ResidueElement(std::move(field), Polynomial::constant(p, n, fp::from_signed(c, p)),
                          Polynomial::constant(p, n, 1), 0);
}

ResidueElement ResidueElement::variable(FieldPtr field, std::string_view name)
{
    const auto idx = field->index_of(name);
    if (!idx) {
        throw UnknownVariable(std::string(name));
    }
    const auto p = field->p;
    const auto n = field->num_vars();
    return ResidueElement(std::move(field), Polynomial::variable(p, n, *idx), Polynomial::constant(p, n, 1), 0);
}

void ResidueElement::finish()
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(field_->p, field_->num_vars(), 1);
        scale_ = 0;
        return;
    }
    const auto lc = den_.leading_coeff();
    if (lc != 1) {
        const auto inv = fp::inv(lc, field_->p);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    const auto p = field_->p;
    while (scale_ > 0 && num_.exponents_divisible_by(p) && den_.exponents_divisible_by(p)) {
        num_ = num_.deflate(p);
        den_ = den_.deflate(p);
        --scale_;
    }
}

void ResidueElement::check_field(const ResidueElement &other) const
{
    if (!same_field(field_, other.field_)) {
        throw FieldMismatch();
    }
}

struct ResidueElement::Aligned {
    Polynomial num_a, den_a, num_b, den_b;
    std::uint32_t scale;
};

ResidueElement::Aligned ResidueElement::align(const ResidueElement &other) const
{
    const std::uint32_t s = std::max(scale_, other.scale_);
    const auto p = field_->p;
    auto lift = [&](const Polynomial &f, std::uint32_t from) {
        return from == s ? f : f.inflate(static_cast<Polynomial::Exponent>(ipow(p, s - from)));
    };
    return Aligned{lift(num_, scale_), lift(den_, scale_), lift(other.num_, other.scale_),
                   lift(other.den_, other.scale_), s};
}

ResidueElement ResidueElement::operator-() const
{
    ResidueElement r = *this;
    r.num_ = -r.num_;
    return r;
}

ResidueElement &ResidueElement::operator+=(const ResidueElement &other)
{
    check_field(other);
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = other;
    }
    auto a = align(other);
    if (a.den_a == a.den_b) {
        Polynomial num = a.num_a + a.num_b;
        if (a.den_a.is_one()) {
            *this = ResidueElement(field_, std::move(num), std::move(a.den_a), a.scale);
            finish();
            return *this;
        }
        return *this = make(field_, std::move(num), std::move(a.den_a), a.scale);
    }
    Polynomial num = a.num_a * a.den_b + a.num_b * a.den_a;
    Polynomial den = a.den_a * a.den_b;
    return *this = make(field_, std::move(num), std::move(den), a.scale);
}

ResidueElement &ResidueElement::operator-=(const ResidueElement &other)
{
    return *this += -other;
}

ResidueElement &ResidueElement::operator*=(const ResidueElement &other)
{
    check_field(other);
    if (is_zero() || other.is_zero()) {
        return *this = ResidueElement(field_);
    }
    auto a = align(other);
    if (a.den_a.is_one() && a.den_b.is_one()) {
        *this = ResidueElement(field_, a.num_a * a.num_b, std::move(a.den_a), a.scale);
        finish();
        return *this;
    }
    // Cross-cancel so the product of reduced fractions stays reduced.
    const Polynomial g1 = gcd(a.num_a, a.den_b);
    const Polynomial g2 = gcd(a.num_b, a.den_a);
    auto div = [](const Polynomial &f, const Polynomial &g) { return g.is_one() ? f : *divide_exact(f, g); };
    Polynomial num = div(a.num_a, g1) * div(a.num_b, g2);
    Polynomial den = div(a.den_a, g2) * div(a.den_b, g1);
    *this = ResidueElement(field_, std::move(num), std::move(den), a.scale);
    finish();
    return *this;
}

ResidueElement &ResidueElement::operator/=(const ResidueElement &other)
{
    return *this *= other.inverse();
}

bool operator==(const ResidueElement &a, const ResidueElement &b)
{
    return same_field(a.field_, b.field_) && a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
}

ResidueElement ResidueElement::scaled(std::int64_t c) const
{
    const auto cc = fp::from_signed(c, field_->p);
    if (cc == 0) {
        return ResidueElement(field_);
    }
    ResidueElement r = *this;
    r.num_ = r.num_.scaled(cc);
    return r;
}

ResidueElement ResidueElement::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    ResidueElement r(field_, den_, num_, scale_);
    r.finish();
    return r;
}

ResidueElement ResidueElement::pow(std::int64_t n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    if (n == 0) {
        return constant(field_, 1);
    }
    ResidueElement r(field_, num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)),
                     scale_);
    r.finish();
    return r;
}

ResidueElement ResidueElement::frobenius() const
{
    if (scale_ > 0) {
        return ResidueElement(field_, num_, den_, scale_ - 1);
    }
    return ResidueElement(field_, num_.frobenius(), den_.frobenius(), 0);
}

bool ResidueElement::is_pth_power() const
{
    if (field_->perfected) {
        return true;
    }
    const auto p = field_->p;
    return num_.exponents_divisible_by(p) && den_.exponents_divisible_by(p);
}

ResidueElement ResidueElement::pth_root() const
{
    const auto p = field_->p;
    if (num_.exponents_divisible_by(p) && den_.exponents_divisible_by(p)) {
        if (scale_ == 0) {
            return ResidueElement(field_, num_.deflate(p), den_.deflate(p), 0);
        }
    }
    if (!field_->perfected) {
        throw NotAPthPower(to_string());
    }
    // Minimality of the current scale guarantees the new one is minimal too.
    return ResidueElement(field_, num_, den_, scale_ + 1);
}

ResidueElement ResidueElement::partial_derivative(std::string_view var) const
{
    const auto &basis = field_->basis_vars;
    const auto it = std::find(basis.begin(), basis.end(), var);
    if (field_->perfected || it == basis.end()) {
        throw UnknownVariable(std::string(var));
    }
    const auto idx = static_cast<std::size_t>(it - basis.begin());
    if (den_.is_one()) {
        ResidueElement r(field_, num_.derivative(idx), den_, 0);
        r.finish();
        return r;
    }
    Polynomial num = num_.derivative(idx) * den_ - num_ * den_.derivative(idx);
    Polynomial den = den_ * den_;
    return make(field_, std::move(num), std::move(den), 0);
}

std::string polynomial_to_string(const Polynomial &f, const FieldConfig &field, std::uint32_t scale)
{
    if (f.is_zero()) {
        return "0";
    }
    const std::uint64_t denom = ipow(field.p, scale);
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != 0) {
            out += " + ";
        }
        std::string mono;
        const auto row = f.exponents(i);
        for (std::size_t v = 0; v < row.size(); ++v) {
            if (row[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += field.var_name(v);
            const std::uint64_t g = std::gcd(std::uint64_t{row[v]}, denom);
            const std::uint64_t a = row[v] / g;
            const std::uint64_t b = denom / g;
            if (b != 1) {
                mono += "^(" + std::to_string(a) + "/" + std::to_string(b) + ")";
            } else if (a != 1) {
                mono += "^" + std::to_string(a);
            }
        }
        const auto c = f.coeff(i);
        if (mono.empty()) {
            out += std::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += std::to_string(c) + "*" + mono;
        }
    }
    return out;
}

std::string ResidueElement::to_string() const
{
    const std::string n = polynomial_to_string(num_, *field_, scale_);
    if (den_.is_one()) {
        return n;
    }
    const std::string d = polynomial_to_string(den_, *field_, scale_);
    const std::string num_s = num_.size() > 1 ? "(" + n + ")" : n;
    const std::string den_s = d.find_first_of("+*") != std::string::npos ? "(" + d + ")" : d;
    return num_s + "/" + den_s;
}

} // namespace swan
