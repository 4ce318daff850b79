#include <swan/series.hpp>

#include <algorithm>
#include <utility>
#include <vector>

#include <swan/errors.hpp>

namespace swan {

std::int64_t add_precision(std::int64_t a, std::int64_t b) noexcept
{
    if (a == kExactPrecision || b == kExactPrecision) {
        return kExactPrecision;
    }
    const std::int64_t s = a + b;
    return std::min(s, kExactPrecision - 1);
}

namespace {

std::int64_t mul_precision(std::int64_t a, std::int64_t k) noexcept
{
    return a == kExactPrecision ? kExactPrecision : a * k;
}

std::string precision_text(std::int64_t prec)
{
    return prec == kExactPrecision ? "exact" : "O(t^" + std::to_string(prec) + ")";
}

} // namespace

LocalElement::LocalElement(FieldPtr field, std::int64_t prec) : field_(std::move(field)), prec_(prec) {}

LocalElement::LocalElement(FieldPtr field, Terms terms, std::int64_t prec) : field_(std::move(field)), prec_(prec)
{
    for (auto &[e, c] : terms) {
        if (!same_field(c.field(), field_)) {
            throw FieldMismatch();
        }
        if (e < prec_ && !c.is_zero()) {
            terms_.emplace(e, std::move(c));
        }
    }
}

LocalElement LocalElement::constant(const ResidueElement &c)
{
    return monomial(c, 0);
}

LocalElement LocalElement::monomial(const ResidueElement &c, std::int64_t exp)
{
    LocalElement r(c.field());
    if (!c.is_zero()) {
        r.terms_.emplace(exp, c);
    }
    return r;
}

LocalElement LocalElement::t_power(const FieldPtr &field, std::int64_t exp)
{
    return monomial(ResidueElement::constant(field, 1), exp);
}

LocalElement LocalElement::integer(const FieldPtr &field, std::int64_t c)
{
    return constant(ResidueElement::constant(field, c));
}

std::optional<std::int64_t> LocalElement::valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::int64_t LocalElement::valuation_bound() const noexcept
{
    return terms_.empty() ? prec_ : terms_.begin()->first;
}

const ResidueElement &LocalElement::leading_coefficient() const
{
    if (terms_.empty()) {
        throw PrecisionExhausted("leading coefficient of " + precision_text(prec_));
    }
    return terms_.begin()->second;
}

ResidueElement LocalElement::coefficient(std::int64_t exp) const
{
    if (exp >= prec_) {
        throw PrecisionExhausted("coefficient of t^" + std::to_string(exp) + " in a series known to "
                                     + precision_text(prec_),
                                 exp - prec_ + 1);
    }
    const auto it = terms_.find(exp);
    return it == terms_.end() ? ResidueElement(field_) : it->second;
}

void LocalElement::check_field(const LocalElement &other) const
{
    if (!same_field(field_, other.field_)) {
        throw FieldMismatch();
    }
}

LocalElement LocalElement::operator-() const
{
    LocalElement r(field_, prec_);
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e, -c);
    }
    return r;
}

LocalElement &LocalElement::operator+=(const LocalElement &other)
{
    check_field(other);
    const std::int64_t prec = std::min(prec_, other.prec_);
    if (prec < prec_) {
        terms_.erase(terms_.lower_bound(prec), terms_.end());
    }
    prec_ = prec;
    for (const auto &[e, c] : other.terms_) {
        if (e >= prec) {
            break;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LocalElement &LocalElement::operator-=(const LocalElement &other)
{
    return *this += -other;
}

LocalElement operator*(const LocalElement &a, const LocalElement &b)
{
    a.check_field(b);
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return LocalElement(a.field_);
    }
    const std::int64_t va = a.valuation_bound();
    const std::int64_t vb = b.valuation_bound();
    const std::int64_t prec = std::min(add_precision(va, b.prec_), add_precision(vb, a.prec_));
    LocalElement r(a.field_, prec);
    for (const auto &[ea, ca] : a.terms_) {
        if (add_precision(ea, vb) >= prec) {
            break;
        }
        for (const auto &[eb, cb] : b.terms_) {
            const std::int64_t e = ea + eb;
            if (e >= prec) {
                break;
            }
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto &kv) { return kv.second.is_zero(); });
    return r;
}

bool operator==(const LocalElement &a, const LocalElement &b)
{
    return same_field(a.field_, b.field_) && a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

LocalElement LocalElement::scaled(const ResidueElement &c) const
{
    if (!same_field(c.field(), field_)) {
        throw FieldMismatch();
    }
    if (c.is_zero()) {
        // 0 * O(t^N) is exactly zero.
        return LocalElement(field_);
    }
    LocalElement r(field_, prec_);
    for (const auto &[e, x] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e, x * c);
    }
    return r;
}

LocalElement LocalElement::shifted(std::int64_t k) const
{
    LocalElement r(field_, add_precision(prec_, k));
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    }
    return r;
}

LocalElement LocalElement::truncated(std::int64_t prec) const
{
    if (prec >= prec_) {
        return *this;
    }
    LocalElement r(field_, prec);
    for (const auto &[e, c] : terms_) {
        if (e >= prec) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

LocalElement LocalElement::inverse(std::int64_t relative_precision) const
{
    if (is_exact_zero()) {
        throw ZeroInverse();
    }
    if (is_zero()) {
        throw PrecisionExhausted("inverse of " + precision_text(prec_));
    }
    const std::int64_t v = terms_.begin()->first;
    const ResidueElement c_inv = terms_.begin()->second.inverse();
    if (is_exact() && terms_.size() == 1) {
        return monomial(c_inv, -v);
    }
    const std::int64_t rel = is_exact() ? relative_precision : prec_ - v;
    // f = c t^v (1 + g); invert 1 + g term by term: h_k = -sum_{j=1..k} g_j h_{k-j}.
    std::vector<std::pair<std::int64_t, ResidueElement>> g;
    for (auto it = std::next(terms_.begin()); it != terms_.end() && it->first - v < rel; ++it) {
        g.emplace_back(it->first - v, it->second * c_inv);
    }
    std::vector<ResidueElement> h(static_cast<std::size_t>(std::max<std::int64_t>(rel, 0)), ResidueElement(field_));
    if (!h.empty()) {
        h[0] = ResidueElement::constant(field_, 1);
    }
    for (std::int64_t k = 1; k < rel; ++k) {
        ResidueElement acc(field_);
        for (const auto &[j, gj] : g) {
            if (j > k) {
                break;
            }
            const auto &prev = h[static_cast<std::size_t>(k - j)];
            if (!prev.is_zero()) {
                acc += gj * prev;
            }
        }
        h[static_cast<std::size_t>(k)] = -acc;
    }
    Terms out;
    for (std::int64_t k = 0; k < rel; ++k) {
        const auto &hk = h[static_cast<std::size_t>(k)];
        if (!hk.is_zero()) {
            out.emplace_hint(out.end(), k - v, hk * c_inv);
        }
    }
    return LocalElement(field_, std::move(out), rel - v);
}

LocalElement LocalElement::frobenius() const
{
    const auto p = static_cast<std::int64_t>(field_->p);
    LocalElement r(field_, mul_precision(prec_, p));
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e * p, c.frobenius());
    }
    return r;
}

LocalElement LocalElement::pow(std::uint64_t n) const
{
    const auto p = field_->p;
    std::uint64_t frob = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++frob;
    }
    LocalElement result = integer(field_, 1);
    if (n != 0) {
        LocalElement base = *this;
        bool first = true;
        while (n != 0) {
            if (n & 1U) {
                result = first ? base : result * base;
                first = false;
            }
            n >>= 1U;
            if (n != 0) {
                base = base * base;
            }
        }
    }
    for (std::uint64_t i = 0; i < frob; ++i) {
        result = result.frobenius();
    }
    return result;
}

LocalElement LocalElement::log_derivative_t() const
{
    LocalElement r(field_, prec_);
    for (const auto &[e, c] : terms_) {
        auto x = c.scaled(e);
        if (!x.is_zero()) {
            r.terms_.emplace_hint(r.terms_.end(), e, std::move(x));
        }
    }
    return r;
}

LocalElement LocalElement::partial_derivative(const std::string &var) const
{
    return map_coefficients([&var](const ResidueElement &c) { return c.partial_derivative(var); });
}

LocalElement LocalElement::map_coefficients(const std::function<ResidueElement(const ResidueElement &)> &fn) const
{
    Terms out;
    for (const auto &[e, c] : terms_) {
        out.emplace_hint(out.end(), e, fn(c));
    }
    FieldPtr field = out.empty() ? field_ : out.begin()->second.field();
    return LocalElement(std::move(field), std::move(out), prec_);
}

std::string LocalElement::to_string() const
{
    std::string out;
    for (const auto &[e, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string cs = c.to_string();
        if (e == 0) {
            out += cs;
            continue;
        }
        const std::string tp = e == 1 ? "t" : "t^" + std::to_string(e);
        if (c.is_one()) {
            out += tp;
            continue;
        }
        if (cs.find_first_of("+/") != std::string::npos) {
            cs = "(" + cs + ")";
        }
        out += cs + "*" + tp;
    }
    if (!is_exact()) {
        out += (out.empty() ? "" : " + ") + ("O(t^" + std::to_string(prec_) + ")");
    }
    return out.empty() ? "0" : out;
}

namespace {

class Substituter {
public:
    Substituter(const LocalElement &f, const Bindings &bindings, const FieldPtr &target, std::int64_t relprec)
        : source_(f.field()), bindings_(bindings), target_(target), relprec_(relprec)
    {
        identity_ = bindings.residue.empty() && same_field(source_, target_);
        for (const auto &[name, b] : bindings.residue) {
            if (!source_->index_of(name)) {
                throw UnknownVariable(name);
            }
            if (!same_field(b.field(), target_)) {
                throw FieldMismatch();
            }
            if (b.valuation_bound() < 0) {
                throw InvalidBindingValuation("binding for " + name + " has negative valuation");
            }
        }
        if (bindings.t) {
            if (!same_field(bindings.t->field(), target_)) {
                throw FieldMismatch();
            }
            if (bindings.t->valuation_bound() < 1) {
                throw InvalidBindingValuation("binding for t must have valuation >= 1");
            }
        }
    }

    LocalElement coefficient_image(const ResidueElement &c)
    {
        if (identity_) {
            return LocalElement::constant(c);
        }
        LocalElement num = polynomial_image(c.numerator());
        LocalElement den = polynomial_image(c.denominator());
        LocalElement q = den.is_exact() && den.terms().size() == 1 && den.valuation() == 0
                             ? num.scaled(den.leading_coefficient().inverse())
                             : num * den.inverse(relprec_);
        for (std::uint32_t i = 0; i < c.scale(); ++i) {
            q = pth_root(q);
        }
        return q;
    }

    LocalElement t_image(std::int64_t j)
    {
        if (!bindings_.t) {
            return LocalElement::t_power(target_, j);
        }
        if (j >= 0) {
            return bindings_.t->pow(static_cast<std::uint64_t>(j));
        }
        if (!t_inverse_) {
            t_inverse_ = bindings_.t->inverse(relprec_);
        }
        return t_inverse_->pow(static_cast<std::uint64_t>(-j));
    }

private:
    LocalElement variable_image(std::size_t idx)
    {
        const std::string &name = source_->var_name(idx);
        if (const auto it = bindings_.residue.find(name); it != bindings_.residue.end()) {
            return it->second;
        }
        return LocalElement::constant(ResidueElement::variable(target_, name));
    }

    const LocalElement &power_image(std::size_t idx, std::uint32_t e)
    {
        const auto key = std::make_pair(idx, e);
        auto it = powers_.find(key);
        if (it == powers_.end()) {
            it = powers_.emplace(key, variable_image(idx).pow(e)).first;
        }
        return it->second;
    }

    LocalElement polynomial_image(const Polynomial &f)
    {
        LocalElement acc(target_);
        for (std::size_t i = 0; i < f.size(); ++i) {
            LocalElement term = LocalElement::integer(target_, f.coeff(i));
            const auto row = f.exponents(i);
            for (std::size_t v = 0; v < row.size(); ++v) {
                if (row[v] != 0) {
                    term = term * power_image(v, row[v]);
                }
            }
            acc += term;
        }
        return acc;
    }

    LocalElement pth_root(const LocalElement &x) const
    {
        const auto p = static_cast<std::int64_t>(target_->p);
        if (!target_->perfected && !x.terms().empty()) {
            throw InvalidBindingValuation("p-th root of a substituted coefficient requires a perfected target");
        }
        LocalElement::Terms out;
        for (const auto &[e, c] : x.terms()) {
            if (e % p != 0) {
                throw InvalidBindingValuation("p-th root of a series with exponent prime to p");
            }
            out.emplace(e / p, c.pth_root());
        }
        const std::int64_t prec = x.is_exact() ? kExactPrecision
                                               : (x.precision() >= 0 ? (x.precision() + p - 1) / p : x.precision() / p);
        return LocalElement(target_, std::move(out), prec);
    }

    FieldPtr source_;
    const Bindings &bindings_;
    FieldPtr target_;
    std::int64_t relprec_;
    bool identity_ = false;
    std::map<std::pair<std::size_t, std::uint32_t>, LocalElement> powers_;
    std::optional<LocalElement> t_inverse_;
};

} // namespace

LocalElement substitute(const LocalElement &f, const Bindings &bindings, const FieldPtr &target,
                        std::int64_t relative_precision)
{
    Substituter sub(f, bindings, target, relative_precision);
    std::int64_t tail = kExactPrecision;
    if (!f.is_exact()) {
        const std::int64_t vt = bindings.t ? bindings.t->valuation_bound() : 1;
        tail = f.precision() * vt;
    }
    LocalElement result(target, tail);
    for (const auto &[j, c] : f.terms()) {
        result += sub.coefficient_image(c) * sub.t_image(j);
    }
    return result;
}

} // namespace swan
