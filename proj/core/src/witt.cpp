#include <swan/witt.hpp>

#include <mutex>
#include <stdexcept>
#include <utility>

#include <swan/errors.hpp>

namespace swan {

namespace {

using Exps = std::vector<std::uint32_t>;

IntPolynomial int_variable(std::size_t nvars, std::size_t var)
{
    IntPolynomial r{nvars, {}};
    Exps e(nvars, 0);
    e[var] = 1;
    r.terms.emplace(std::move(e), BigInt(1));
    return r;
}

void add_into(IntPolynomial &acc, const IntPolynomial &f, const BigInt &scale)
{
    for (const auto &[e, c] : f.terms) {
        auto [it, inserted] = acc.terms.emplace(e, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) {
                acc.terms.erase(it);
            }
        }
    }
}

IntPolynomial int_mul(const IntPolynomial &a, const IntPolynomial &b)
{
    IntPolynomial r{a.nvars, {}};
    Exps e(a.nvars);
    for (const auto &[ea, ca] : a.terms) {
        for (const auto &[eb, cb] : b.terms) {
            for (std::size_t v = 0; v < a.nvars; ++v) {
                e[v] = ea[v] + eb[v];
            }
            auto [it, inserted] = r.terms.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms, [](const auto &kv) { return kv.second == 0; });
    return r;
}

IntPolynomial int_pow(const IntPolynomial &f, std::uint64_t n)
{
    IntPolynomial result{f.nvars, {{Exps(f.nvars, 0), BigInt(1)}}};
    IntPolynomial base = f;
    while (n != 0) {
        if (n & 1U) {
            result = int_mul(result, base);
        }
        n >>= 1U;
        if (n != 0) {
            base = int_mul(base, base);
        }
    }
    return result;
}

IntPolynomial divide_by(const IntPolynomial &f, const BigInt &d)
{
    IntPolynomial r{f.nvars, {}};
    for (const auto &[e, c] : f.terms) {
        if (c % d != 0) {
            throw std::logic_error("ghost recursion produced a non-integral coefficient");
        }
        r.terms.emplace(e, c / d);
    }
    return r;
}

BigInt big_pow(const BigInt &b, std::uint64_t e)
{
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

// w_n(Z) for Z = variables offset..offset+n of an nvars-variable ring.
IntPolynomial ghost(std::size_t n, std::size_t offset, std::size_t nvars, fp::Coeff p)
{
    IntPolynomial r{nvars, {}};
    for (std::size_t i = 0; i <= n; ++i) {
        const IntPolynomial zi = int_pow(int_variable(nvars, offset + i), static_cast<std::uint64_t>(big_pow(p, n - i)));
        add_into(r, zi, big_pow(p, i));
    }
    return r;
}

std::shared_ptr<const WittPolynomials> compute(fp::Coeff p, std::size_t s)
{
    auto w = std::make_shared<WittPolynomials>();
    w->p = p;
    w->length = s;
    const std::size_t add_vars = 2 * s;
    for (std::size_t n = 0; n < s; ++n) {
        const BigInt pn = big_pow(p, n);
        IntPolynomial sum = ghost(n, 0, add_vars, p);
        add_into(sum, ghost(n, s, add_vars, p), 1);
        IntPolynomial neg{s, {}};
        add_into(neg, ghost(n, 0, s, p), -1);
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = static_cast<std::uint64_t>(big_pow(p, n - i));
            add_into(sum, int_pow(w->add_polys[i], e), -big_pow(p, i));
            add_into(neg, int_pow(w->neg_polys[i], e), -big_pow(p, i));
        }
        w->add_polys.push_back(divide_by(sum, pn));
        w->neg_polys.push_back(divide_by(neg, pn));
    }
    for (std::size_t n = 0; n < s; ++n) {
        w->add_mod_p.push_back(w->add_polys[n].reduce_mod(p));
        w->neg_mod_p.push_back(w->neg_polys[n].reduce_mod(p));
    }
    return w;
}

// Evaluate a mod-p polynomial at series arguments. Terms touching an exactly
// zero argument vanish and are skipped.
LocalElement evaluate(const Polynomial &f, const std::vector<LocalElement> &args, const FieldPtr &field)
{
    LocalElement acc(field);
    std::map<std::pair<std::size_t, std::uint32_t>, LocalElement> powers;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto row = f.exponents(i);
        bool vanishes = false;
        for (std::size_t v = 0; v < row.size(); ++v) {
            if (row[v] != 0 && args[v].is_exact_zero()) {
                vanishes = true;
                break;
            }
        }
        if (vanishes) {
            continue;
        }
        std::optional<LocalElement> term;
        for (std::size_t v = 0; v < row.size(); ++v) {
            if (row[v] == 0) {
                continue;
            }
            const auto key = std::make_pair(v, row[v]);
            auto it = powers.find(key);
            if (it == powers.end()) {
                it = powers.emplace(key, args[v].pow(row[v])).first;
            }
            term = term ? *term * it->second : it->second;
        }
        const auto c = static_cast<std::int64_t>(f.coeff(i));
        if (!term) {
            acc += LocalElement::integer(field, c);
        } else {
            acc += c == 1 ? *term : term->scaled(ResidueElement::constant(field, c));
        }
    }
    return acc;
}

std::vector<LocalElement> witt_coordinates(const WittRep &a)
{
    // x_k = a_{-(s-1-k)}
    const std::size_t s = a.length();
    std::vector<LocalElement> x;
    x.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        x.push_back(a.component(s - 1 - k));
    }
    return x;
}

WittRep from_witt_coordinates(const FieldPtr &field, const std::vector<LocalElement> &x)
{
    const std::size_t s = x.size();
    WittRep r(field, s);
    for (std::size_t k = 0; k < s; ++k) {
        r.set_component(s - 1 - k, x[k]);
    }
    return r;
}

} // namespace

BigInt IntPolynomial::evaluate(const std::vector<BigInt> &point) const
{
    BigInt acc = 0;
    for (const auto &[e, c] : terms) {
        BigInt t = c;
        for (std::size_t v = 0; v < nvars; ++v) {
            t *= big_pow(point.at(v), e[v]);
        }
        acc += t;
    }
    return acc;
}

Polynomial IntPolynomial::reduce_mod(fp::Coeff p) const
{
    std::vector<Polynomial::Exponent> exps;
    std::vector<Polynomial::Coeff> coeffs;
    for (const auto &[e, c] : terms) {
        BigInt r = c % p;
        if (r < 0) {
            r += p;
        }
        exps.insert(exps.end(), e.begin(), e.end());
        coeffs.push_back(static_cast<Polynomial::Coeff>(r));
    }
    return Polynomial::from_terms(p, nvars, std::move(exps), std::move(coeffs));
}

std::shared_ptr<const WittPolynomials> build_structure_polynomials(fp::Coeff p, std::size_t length)
{
    if (!fp::is_prime(p)) {
        throw std::invalid_argument("Witt polynomials need a prime characteristic");
    }
    if (length == 0 || length > kMaxWittLength) {
        throw std::invalid_argument("Witt length must be between 1 and " + std::to_string(kMaxWittLength));
    }
    static std::mutex mutex;
    static std::map<std::pair<fp::Coeff, std::size_t>, std::shared_ptr<const WittPolynomials>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[{p, length}];
    if (!slot) {
        slot = compute(p, length);
    }
    return slot;
}

WittRep::WittRep(FieldPtr field, std::size_t length) : field_(std::move(field)), length_(length)
{
    if (length == 0 || length > kMaxWittLength) {
        throw std::invalid_argument("Witt length must be between 1 and " + std::to_string(kMaxWittLength));
    }
}

WittRep WittRep::from_slots(const FieldPtr &field, const std::vector<LocalElement> &slots)
{
    WittRep r(field, slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
        r.set_component(slots.size() - 1 - k, slots[k]);
    }
    return r;
}

LocalElement WittRep::component(std::size_t i) const
{
    const auto it = components_.find(i);
    return it == components_.end() ? LocalElement(field_) : it->second;
}

void WittRep::set_component(std::size_t i, LocalElement value)
{
    if (i >= length_) {
        throw std::out_of_range("Witt slot beyond the length bound");
    }
    if (!same_field(value.field(), field_)) {
        throw FieldMismatch();
    }
    if (value.is_exact_zero()) {
        components_.erase(i);
    } else {
        components_.insert_or_assign(i, std::move(value));
    }
}

std::vector<LocalElement> WittRep::slots() const
{
    return witt_coordinates(*this);
}

WittRep WittRep::padded(std::size_t length) const
{
    if (length < length_) {
        throw std::invalid_argument("padding cannot shorten a Witt vector");
    }
    WittRep r(field_, length);
    r.components_ = components_;
    return r;
}

bool operator==(const WittRep &a, const WittRep &b)
{
    return same_field(a.field_, b.field_) && a.components_ == b.components_;
}

WittRep witt_add(const WittRep &a, const WittRep &b)
{
    if (!same_field(a.field(), b.field())) {
        throw FieldMismatch();
    }
    const std::size_t s = std::max(a.length(), b.length());
    if (b.is_zero()) {
        return a.padded(s);
    }
    if (a.is_zero()) {
        return b.padded(s);
    }
    const auto polys = build_structure_polynomials(a.field()->p, s);
    std::vector<LocalElement> args = witt_coordinates(a.padded(s));
    const std::vector<LocalElement> y = witt_coordinates(b.padded(s));
    args.insert(args.end(), y.begin(), y.end());
    std::vector<LocalElement> out;
    out.reserve(s);
    for (std::size_t n = 0; n < s; ++n) {
        out.push_back(evaluate(polys->add_mod_p[n], args, a.field()));
    }
    return from_witt_coordinates(a.field(), out);
}

WittRep witt_neg(const WittRep &a)
{
    if (a.is_zero()) {
        return a;
    }
    const auto polys = build_structure_polynomials(a.field()->p, a.length());
    const std::vector<LocalElement> args = witt_coordinates(a);
    std::vector<LocalElement> out;
    out.reserve(a.length());
    for (std::size_t n = 0; n < a.length(); ++n) {
        out.push_back(evaluate(polys->neg_mod_p[n], args, a.field()));
    }
    return from_witt_coordinates(a.field(), out);
}

WittRep witt_sub(const WittRep &a, const WittRep &b)
{
    return witt_add(a, witt_neg(b));
}

WittRep witt_multiply(const WittRep &a, std::uint64_t n)
{
    WittRep result(a.field(), a.length());
    WittRep base = a;
    while (n != 0) {
        if (n & 1U) {
            result = witt_add(result, base);
        }
        n >>= 1U;
        if (n != 0) {
            base = witt_add(base, base);
        }
    }
    return result;
}

WittRep frobenius(const WittRep &a)
{
    WittRep r(a.field(), a.length());
    for (const auto &[i, c] : a.components()) {
        r.set_component(i, c.frobenius());
    }
    return r;
}

WittRep verschiebung(const WittRep &a)
{
    WittRep r(a.field(), a.length());
    for (const auto &[i, c] : a.components()) {
        if (i != 0) {
            r.set_component(i - 1, c);
        }
    }
    return r;
}

WittRep apply_F_minus_1(const WittRep &w)
{
    return witt_sub(frobenius(w), w);
}

} // namespace swan
