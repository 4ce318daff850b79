#include <swan/polynomial.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <unordered_map>
#include <utility>

#include <swan/errors.hpp>

namespace swan {

namespace {

// Lexicographic three-way comparison of two exponent rows.
int compare_rows(const Polynomial::Exponent *a, const Polynomial::Exponent *b, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

// Packs exponent rows into one integer whose order is the lexicographic
// order of the rows: variable 0 takes the most significant bits. Only usable
// when the per-variable bit widths fit into 64 bits.
class RowPacker {
public:
    RowPacker(const std::vector<Polynomial::Exponent> &max_exp)
    {
        shifts_.resize(max_exp.size());
        unsigned total = 0;
        for (std::size_t v = max_exp.size(); v-- > 0;) {
            shifts_[v] = total;
            total += static_cast<unsigned>(std::bit_width(max_exp[v]));
        }
        ok_ = total <= 64;
    }

    bool ok() const noexcept
    {
        return ok_;
    }

    std::uint64_t pack(const Polynomial::Exponent *row) const noexcept
    {
        std::uint64_t key = 0;
        for (std::size_t v = 0; v < shifts_.size(); ++v) {
            if (row[v] != 0) {
                key |= static_cast<std::uint64_t>(row[v]) << shifts_[v];
            }
        }
        return key;
    }

    void unpack(std::uint64_t key, Polynomial::Exponent *row, const std::vector<Polynomial::Exponent> &max_exp) const
    {
        for (std::size_t v = 0; v < shifts_.size(); ++v) {
            const unsigned width = static_cast<unsigned>(std::bit_width(max_exp[v]));
            row[v] = width == 0 ? 0 : static_cast<Polynomial::Exponent>((key >> shifts_[v]) & ((std::uint64_t{1} << width) - 1));
        }
    }

private:
    std::vector<unsigned> shifts_;
    bool ok_ = false;
};

} // namespace

Polynomial::Polynomial(Coeff p, std::size_t nvars) : p_(p), nvars_(nvars) {}

Polynomial Polynomial::constant(Coeff p, std::size_t nvars, Coeff c)
{
    Polynomial r(p, nvars);
    c %= p;
    if (c != 0) {
        r.exps_.assign(nvars, 0);
        r.coeffs_.push_back(c);
    }
    return r;
}

Polynomial Polynomial::variable(Coeff p, std::size_t nvars, std::size_t var, Exponent e)
{
    assert(var < nvars);
    Polynomial r(p, nvars);
    r.exps_.assign(nvars, 0);
    r.exps_[var] = e;
    r.coeffs_.push_back(1 % p);
    if (r.coeffs_.front() == 0) {
        r.exps_.clear();
        r.coeffs_.clear();
    }
    return r;
}

Polynomial Polynomial::monomial(Coeff p, std::span<const Exponent> exps, Coeff c)
{
    Polynomial r(p, exps.size());
    c %= p;
    if (c != 0) {
        r.exps_.assign(exps.begin(), exps.end());
        r.coeffs_.push_back(c);
    }
    return r;
}

Polynomial Polynomial::from_terms(Coeff p, std::size_t nvars, std::vector<Exponent> exps, std::vector<Coeff> coeffs)
{
    assert(exps.size() == coeffs.size() * nvars);
    Polynomial r(p, nvars);
    r.canonicalize(std::move(exps), std::move(coeffs));
    return r;
}

void Polynomial::canonicalize(std::vector<Exponent> exps, std::vector<Coeff> coeffs)
{
    const std::size_t n = coeffs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t nv = nvars_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_rows(exps.data() + a * nv, exps.data() + b * nv, nv) > 0;
    });
    exps_.clear();
    coeffs_.clear();
    exps_.reserve(exps.size());
    coeffs_.reserve(n);
    for (std::size_t i = 0; i < n;) {
        const Exponent *row = exps.data() + order[i] * nv;
        std::uint64_t acc = 0;
        std::size_t j = i;
        for (; j < n && compare_rows(row, exps.data() + order[j] * nv, nv) == 0; ++j) {
            acc += coeffs[order[j]] % p_;
        }
        const auto c = static_cast<Coeff>(acc % p_);
        if (c != 0) {
            exps_.insert(exps_.end(), row, row + nv);
            coeffs_.push_back(c);
        }
        i = j;
    }
}

bool Polynomial::is_constant() const noexcept
{
    if (coeffs_.empty()) {
        return true;
    }
    if (coeffs_.size() != 1) {
        return false;
    }
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Polynomial::is_one() const noexcept
{
    return coeffs_.size() == 1 && coeffs_.front() == 1 && is_constant();
}

Polynomial::Coeff Polynomial::constant_term() const noexcept
{
    // The constant monomial is lexicographically smallest, so it can only be last.
    if (coeffs_.empty()) {
        return 0;
    }
    const std::size_t last = coeffs_.size() - 1;
    const auto row = exponents(last);
    return std::all_of(row.begin(), row.end(), [](Exponent e) { return e == 0; }) ? coeffs_[last] : 0;
}

Polynomial::Exponent Polynomial::degree(std::size_t var) const noexcept
{
    Exponent d = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        d = std::max(d, exps_[i * nvars_ + var]);
    }
    return d;
}

Polynomial::Exponent Polynomial::total_degree() const noexcept
{
    Exponent d = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto row = exponents(i);
        d = std::max(d, std::accumulate(row.begin(), row.end(), Exponent{0}));
    }
    return d;
}

std::vector<Polynomial::Exponent> Polynomial::monomial_content() const
{
    if (coeffs_.empty()) {
        return std::vector<Exponent>(nvars_, 0);
    }
    std::vector<Exponent> m(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(nvars_));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        for (std::size_t v = 0; v < nvars_; ++v) {
            m[v] = std::min(m[v], exps_[i * nvars_ + v]);
        }
    }
    return m;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &c : r.coeffs_) {
        c = fp::neg(c, p_);
    }
    return r;
}

Polynomial Polynomial::merged(const Polynomial &other, bool subtract) const
{
    assert(p_ == other.p_ && nvars_ == other.nvars_);
    Polynomial r(p_, nvars_);
    r.exps_.reserve(exps_.size() + other.exps_.size());
    r.coeffs_.reserve(coeffs_.size() + other.coeffs_.size());
    std::size_t i = 0, j = 0;
    const std::size_t n = coeffs_.size(), m = other.coeffs_.size();
    auto push = [&](const Exponent *row, Coeff c) {
        if (c != 0) {
            r.exps_.insert(r.exps_.end(), row, row + nvars_);
            r.coeffs_.push_back(c);
        }
    };
    while (i < n || j < m) {
        int cmp;
        if (i == n) {
            cmp = -1;
        } else if (j == m) {
            cmp = 1;
        } else {
            cmp = compare_rows(exps_.data() + i * nvars_, other.exps_.data() + j * nvars_, nvars_);
        }
        if (cmp > 0) {
            push(exps_.data() + i * nvars_, coeffs_[i]);
            ++i;
        } else if (cmp < 0) {
            const Coeff c = subtract ? fp::neg(other.coeffs_[j], p_) : other.coeffs_[j];
            push(other.exps_.data() + j * nvars_, c);
            ++j;
        } else {
            const Coeff c = subtract ? fp::sub(coeffs_[i], other.coeffs_[j], p_)
                                     : fp::add(coeffs_[i], other.coeffs_[j], p_);
            push(exps_.data() + i * nvars_, c);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = other;
    }
    return *this = merged(other, false);
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    if (other.is_zero()) {
        return *this;
    }
    return *this = merged(other, true);
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    assert(a.p_ == b.p_ && a.nvars_ == b.nvars_);
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.p_, a.nvars_);
    }
    if (b.is_monomial()) {
        return a.shifted(b.exponents(0), b.coeffs_.front());
    }
    if (a.is_monomial()) {
        return b.shifted(a.exponents(0), a.coeffs_.front());
    }
    const std::size_t nv = a.nvars_;
    std::vector<Polynomial::Exponent> max_exp(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        max_exp[v] = a.degree(v) + b.degree(v);
    }
    const RowPacker packer(max_exp);
    if (packer.ok()) {
        std::unordered_map<std::uint64_t, std::uint64_t> acc;
        acc.reserve(a.size() * b.size());
        std::vector<std::uint64_t> keys_b(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            keys_b[j] = packer.pack(b.exps_.data() + j * nv);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            // Row sums never carry between fields, so keys add.
            const std::uint64_t ka = packer.pack(a.exps_.data() + i * nv);
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto &c = acc[ka + keys_b[j]];
                c = (c + fp::mul(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
            }
        }
        std::vector<std::pair<std::uint64_t, Polynomial::Coeff>> terms;
        terms.reserve(acc.size());
        for (const auto &[k, c] : acc) {
            if (c != 0) {
                terms.emplace_back(k, static_cast<Polynomial::Coeff>(c));
            }
        }
        std::sort(terms.begin(), terms.end(), [](const auto &x, const auto &y) { return x.first > y.first; });
        Polynomial r(a.p_, nv);
        r.exps_.resize(terms.size() * nv);
        r.coeffs_.reserve(terms.size());
        for (std::size_t t = 0; t < terms.size(); ++t) {
            packer.unpack(terms[t].first, r.exps_.data() + t * nv, max_exp);
            r.coeffs_.push_back(terms[t].second);
        }
        return r;
    }
    std::vector<Polynomial::Exponent> exps;
    std::vector<Polynomial::Coeff> coeffs;
    exps.reserve(a.size() * b.size() * nv);
    coeffs.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto *ra = a.exps_.data() + i * nv;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto *rb = b.exps_.data() + j * nv;
            for (std::size_t v = 0; v < nv; ++v) {
                exps.push_back(ra[v] + rb[v]);
            }
            coeffs.push_back(fp::mul(a.coeffs_[i], b.coeffs_[j], a.p_));
        }
    }
    Polynomial r(a.p_, nv);
    r.canonicalize(std::move(exps), std::move(coeffs));
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    return *this = *this * other;
}

Polynomial Polynomial::scaled(Coeff c) const
{
    c %= p_;
    if (c == 0) {
        return Polynomial(p_, nvars_);
    }
    Polynomial r = *this;
    for (auto &x : r.coeffs_) {
        x = fp::mul(x, c, p_);
    }
    return r;
}

Polynomial Polynomial::shifted(std::span<const Exponent> mono, Coeff c) const
{
    assert(mono.size() == nvars_);
    c %= p_;
    if (c == 0) {
        return Polynomial(p_, nvars_);
    }
    // Multiplying by a monomial preserves the lexicographic order.
    Polynomial r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        for (std::size_t v = 0; v < nvars_; ++v) {
            r.exps_[i * nvars_ + v] += mono[v];
        }
        r.coeffs_[i] = fp::mul(r.coeffs_[i], c, p_);
    }
    return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const
{
    // Split off the largest power of p and apply it as Frobenius.
    std::uint64_t frob = 0;
    while (n != 0 && n % p_ == 0) {
        n /= p_;
        ++frob;
    }
    Polynomial result = constant(p_, nvars_, 1);
    Polynomial base = *this;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    for (std::uint64_t i = 0; i < frob; ++i) {
        result = result.frobenius();
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    assert(var < nvars_);
    std::vector<Exponent> exps;
    std::vector<Coeff> coeffs;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Exponent e = exps_[i * nvars_ + var];
        const Coeff c = fp::mul(coeffs_[i], static_cast<Coeff>(e % p_), p_);
        if (c == 0) {
            continue;
        }
        const auto row = exponents(i);
        exps.insert(exps.end(), row.begin(), row.end());
        exps[exps.size() - nvars_ + var] -= 1;
        coeffs.push_back(c);
    }
    // Lowering one exponent keeps distinct rows distinct and, among surviving
    // rows, preserves the order, so this is already canonical.
    Polynomial r(p_, nvars_);
    r.exps_ = std::move(exps);
    r.coeffs_ = std::move(coeffs);
    return r;
}

Polynomial Polynomial::inflate(Exponent factor) const
{
    Polynomial r = *this;
    for (auto &e : r.exps_) {
        e *= factor;
    }
    return r;
}

bool Polynomial::exponents_divisible_by(Exponent q) const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [q](Exponent e) { return e % q == 0; });
}

Polynomial Polynomial::deflate(Exponent q) const
{
    assert(exponents_divisible_by(q));
    Polynomial r = *this;
    for (auto &e : r.exps_) {
        e /= q;
    }
    return r;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || coeffs_.front() == 1) {
        return *this;
    }
    return scaled(fp::inv(coeffs_.front(), p_));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const
{
    std::vector<Polynomial> out(degree(var) + 1, Polynomial(p_, nvars_));
    // Rows are visited in decreasing lex order and zeroing `var` keeps the
    // relative order of rows sharing the same exponent of `var`, but rows from
    // different buckets interleave, so collect then canonicalize per bucket.
    std::vector<std::vector<Exponent>> exps(out.size());
    std::vector<std::vector<Coeff>> coeffs(out.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto row = exponents(i);
        const Exponent d = row[var];
        exps[d].insert(exps[d].end(), row.begin(), row.end());
        exps[d][exps[d].size() - nvars_ + var] = 0;
        coeffs[d].push_back(coeffs_[i]);
    }
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d].canonicalize(std::move(exps[d]), std::move(coeffs[d]));
    }
    return out;
}

Polynomial Polynomial::from_coefficients_in(const std::vector<Polynomial> &coeffs, std::size_t var)
{
    assert(!coeffs.empty());
    Polynomial r(coeffs.front().p_, coeffs.front().nvars_);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].is_zero()) {
            continue;
        }
        std::vector<Exponent> mono(r.nvars_, 0);
        mono[var] = static_cast<Exponent>(d);
        r += coeffs[d].shifted(mono, 1);
    }
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial &a, const Polynomial &b)
{
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    const auto p = a.characteristic();
    const std::size_t nv = a.num_vars();
    if (a.is_zero()) {
        return a;
    }
    if (b.is_constant()) {
        return a.scaled(fp::inv(b.coeff(0), p));
    }
    const auto lt_b = b.exponents(0);
    const auto inv_lc = fp::inv(b.coeff(0), p);
    std::vector<Polynomial::Exponent> q_exps;
    std::vector<Polynomial::Coeff> q_coeffs;
    std::vector<Polynomial::Exponent> mono(nv);
    Polynomial r = a;
    while (!r.is_zero()) {
        const auto lt_r = r.exponents(0);
        for (std::size_t v = 0; v < nv; ++v) {
            if (lt_r[v] < lt_b[v]) {
                return std::nullopt;
            }
            mono[v] = lt_r[v] - lt_b[v];
        }
        const auto c = fp::mul(r.coeff(0), inv_lc, p);
        q_exps.insert(q_exps.end(), mono.begin(), mono.end());
        q_coeffs.push_back(c);
        r -= b.shifted(mono, c);
    }
    return Polynomial::from_terms(p, nv, std::move(q_exps), std::move(q_coeffs));
}

namespace {

using Univariate = std::vector<Polynomial>;

std::size_t first_variable(const Polynomial &f)
{
    std::size_t best = f.num_vars();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto row = f.exponents(i);
        for (std::size_t v = 0; v < std::min(best, row.size()); ++v) {
            if (row[v] != 0) {
                best = v;
                break;
            }
        }
    }
    return best;
}

Polynomial content_of(const Univariate &u)
{
    Polynomial g(u.front().characteristic(), u.front().num_vars());
    for (const auto &c : u) {
        g = gcd(g, c);
        if (g.is_one()) {
            break;
        }
    }
    return g;
}

void trim(Univariate &u)
{
    while (!u.empty() && u.back().is_zero()) {
        u.pop_back();
    }
}

// Pseudo-remainder of a by b (both as univariate in the chosen variable).
Univariate pseudo_remainder(Univariate a, const Univariate &b)
{
    const Polynomial &lc_b = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const Polynomial lc_a = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto &c : a) {
            c *= lc_b;
        }
        for (std::size_t d = 0; d < b.size(); ++d) {
            a[d + shift] -= lc_a * b[d];
        }
        trim(a);
    }
    return a;
}

Univariate primitive(Univariate u)
{
    const Polynomial c = content_of(u);
    if (!c.is_one()) {
        for (auto &x : u) {
            x = *divide_exact(x, c);
        }
    }
    return u;
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    const auto p = a.characteristic();
    const std::size_t nv = a.num_vars();
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return Polynomial::constant(p, nv, 1);
    }
    if (a.is_monomial() || b.is_monomial()) {
        const Polynomial &mono = a.is_monomial() ? a : b;
        const Polynomial &other = a.is_monomial() ? b : a;
        auto m = other.monomial_content();
        const auto e = mono.exponents(0);
        for (std::size_t v = 0; v < nv; ++v) {
            m[v] = std::min(m[v], e[v]);
        }
        return Polynomial::monomial(p, m, 1);
    }
    const std::size_t var = std::min(first_variable(a), first_variable(b));
    if (a.degree(var) == 0) {
        return gcd(a, content_of(b.coefficients_in(var)));
    }
    if (b.degree(var) == 0) {
        return gcd(content_of(a.coefficients_in(var)), b);
    }
    Univariate ua = a.coefficients_in(var);
    Univariate ub = b.coefficients_in(var);
    const Polynomial content_gcd = gcd(content_of(ua), content_of(ub));
    ua = primitive(std::move(ua));
    ub = primitive(std::move(ub));
    if (ua.size() < ub.size()) {
        std::swap(ua, ub);
    }
    while (true) {
        Univariate r = pseudo_remainder(ua, ub);
        if (r.empty()) {
            break;
        }
        if (r.size() == 1) {
            // Nonzero remainder of degree zero: the primitive parts are coprime.
            ub = {Polynomial::constant(p, nv, 1)};
            break;
        }
        ua = std::move(ub);
        ub = primitive(std::move(r));
    }
    return (Polynomial::from_coefficients_in(ub, var) * content_gcd).monic();
}

} // namespace swan
