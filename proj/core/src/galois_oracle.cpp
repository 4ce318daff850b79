#include <swan/galois_oracle.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <swan/errors.hpp>

namespace swan {

namespace {

// Elements of B as coefficient vectors in 1, beta, ..., beta^(p-1) over K.
class ASAlgebra {
public:
    ASAlgebra(LocalElement a, std::int64_t m) : a_(std::move(a)), p_(a_.field()->p), m_(m) {}

    using Element = std::vector<LocalElement>;

    Element zero() const
    {
        return Element(p_, LocalElement(a_.field()));
    }

    Element embed(const LocalElement &x) const
    {
        Element r = zero();
        r[0] = x;
        return r;
    }

    Element beta_power(std::size_t k, const LocalElement &c) const
    {
        Element r = zero();
        r[k] = c;
        return r;
    }

    Element add(const Element &x, const Element &y) const
    {
        Element r = x;
        for (std::size_t k = 0; k < p_; ++k) {
            r[k] += y[k];
        }
        return r;
    }

    Element sub(const Element &x, const Element &y) const
    {
        Element r = x;
        for (std::size_t k = 0; k < p_; ++k) {
            r[k] -= y[k];
        }
        return r;
    }

    // Product with beta^k for k >= p folded back through beta^p = beta + a.
    Element mul(const Element &x, const Element &y) const
    {
        std::vector<LocalElement> wide(2 * p_ - 1, LocalElement(a_.field()));
        for (std::size_t i = 0; i < p_; ++i) {
            if (x[i].is_exact_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < p_; ++j) {
                if (!y[j].is_exact_zero()) {
                    wide[i + j] += x[i] * y[j];
                }
            }
        }
        for (std::size_t k = wide.size() - 1; k >= p_; --k) {
            if (wide[k].is_exact_zero()) {
                continue;
            }
            wide[k - p_ + 1] += wide[k];
            wide[k - p_] += wide[k] * a_;
        }
        wide.erase(wide.begin() + static_cast<std::ptrdiff_t>(p_), wide.end());
        return wide;
    }

    // v_B(sum s_k beta^k) = min_k (p v_t(s_k) - m k); the terms have distinct
    // values mod p, so no cancellation is possible.
    std::optional<std::int64_t> valuation(const Element &x) const
    {
        std::optional<std::int64_t> best;
        std::optional<std::int64_t> unknown_floor;
        const auto p = static_cast<std::int64_t>(p_);
        for (std::size_t k = 0; k < p_; ++k) {
            const auto kk = static_cast<std::int64_t>(k);
            if (const auto v = x[k].valuation()) {
                const std::int64_t val = p * *v - m_ * kk;
                best = best ? std::min(*best, val) : val;
            } else if (!x[k].is_exact()) {
                const std::int64_t floor = p * x[k].precision() - m_ * kk;
                unknown_floor = unknown_floor ? std::min(*unknown_floor, floor) : floor;
            }
        }
        if (unknown_floor && (!best || *unknown_floor <= *best)) {
            throw PrecisionExhausted("valuation in the Artin-Schreier extension is not determined", 1);
        }
        return best;
    }

private:
    LocalElement a_;
    std::size_t p_;
    std::int64_t m_;
};

// Inverse of m mod p, in 1..p-1.
std::int64_t inverse_mod(std::int64_t m, std::int64_t p)
{
    return static_cast<std::int64_t>(fp::inv(static_cast<fp::Coeff>(((m % p) + p) % p), static_cast<fp::Coeff>(p)));
}

} // namespace

BreakComputation analyse_extension(const LocalElement &a)
{
    const auto v = a.valuation();
    const auto p = static_cast<std::int64_t>(a.field()->p);
    if (!v || *v >= 0) {
        throw UnsupportedCase("Artin-Schreier extension is unramified (v(a) >= 0)");
    }
    BreakComputation bc;
    bc.m = -*v;
    if (bc.m % p == 0) {
        throw UnsupportedCase("pole order " + std::to_string(bc.m) + " is divisible by p");
    }
    const ASAlgebra B(a, bc.m);
    const auto field = a.field();

    // beta + j is again a root of the defining polynomial.
    const auto beta = B.beta_power(1, LocalElement::integer(field, 1));
    for (std::int64_t j = 1; j < p; ++j) {
        const auto root = B.add(beta, B.embed(LocalElement::integer(field, j)));
        auto power = root;
        for (std::int64_t k = 1; k < p; ++k) {
            power = B.mul(power, root);
        }
        const auto relation = B.sub(B.sub(power, root), B.embed(a));
        if (B.valuation(relation)) {
            throw std::logic_error("beta + j is not a root of x^p - x - a");
        }
    }

    // pi_B = t^gamma beta^alpha with p gamma - m alpha = 1.
    bc.alpha = p - inverse_mod(bc.m, p);
    bc.gamma = (1 + bc.m * bc.alpha) / p;
    const auto t_gamma = LocalElement::t_power(field, bc.gamma);
    auto pi = B.embed(t_gamma);
    for (std::int64_t k = 0; k < bc.alpha; ++k) {
        pi = B.mul(pi, beta);
    }
    bc.v_pi = *B.valuation(pi);
    bc.v_t = *B.valuation(B.embed(LocalElement::t_power(field, 1)));
    if (bc.v_pi != 1) {
        throw std::logic_error("constructed element is not a uniformizer");
    }

    // sigma^j(pi_B) = t^gamma (beta + j)^alpha
    for (std::int64_t j = 1; j < p; ++j) {
        const auto root = B.add(beta, B.embed(LocalElement::integer(field, j)));
        auto image = B.embed(t_gamma);
        for (std::int64_t k = 0; k < bc.alpha; ++k) {
            image = B.mul(image, root);
        }
        bc.i_sigma.push_back(*B.valuation(B.sub(image, pi)));
    }

    const std::int64_t top = *std::max_element(bc.i_sigma.begin(), bc.i_sigma.end());
    bc.break_index = top - 1;
    bc.profile.e = bc.v_t;
    for (std::int64_t i = 0; i <= top; ++i) {
        // The identity always lies in G_i.
        const auto moving = std::count_if(bc.i_sigma.begin(), bc.i_sigma.end(), [&](auto s) { return s >= i + 1; });
        const std::int64_t order = 1 + moving;
        bc.profile.group_orders.push_back(order);
        bc.profile.codims.push_back(order > 1 ? 1 : 0);
    }
    return bc;
}

std::int64_t ramification_break(const LocalElement &a)
{
    return analyse_extension(a).break_index;
}

FiltrationConductors conductor_from_filtration(const RamificationProfile &profile)
{
    const auto &g = profile.group_orders;
    if (profile.e <= 0 || g.empty() || g.size() != profile.codims.size() || g.back() != 1) {
        throw std::invalid_argument("malformed ramification profile");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 1 || (i > 0 && g[i] > g[i - 1]) || (profile.codims[i] != 0 && profile.codims[i] != 1)) {
            throw std::invalid_argument("malformed ramification profile");
        }
    }
    std::int64_t artin_num = 0;
    std::int64_t swan_num = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        artin_num += g[i] * profile.codims[i];
        if (i >= 1) {
            swan_num += g[i] * profile.codims[i];
        }
    }
    if (artin_num % profile.e != 0 || swan_num % profile.e != 0) {
        throw NonIntegralConductor(std::to_string(artin_num) + "/" + std::to_string(profile.e) + ", "
                                   + std::to_string(swan_num) + "/" + std::to_string(profile.e));
    }
    return {artin_num / profile.e, swan_num / profile.e};
}

OracleReport oracle_check(const Character &chi)
{
    if (chi.tame_order != 1) {
        throw UnsupportedCase("the oracle handles characters without a tame part");
    }
    const ConductorReport c = conductors(chi);
    for (const auto &[i, x] : c.reduced.components()) {
        if (i != 0) {
            throw UnsupportedCase("the oracle handles characters of order p only");
        }
    }
    const LocalElement a = c.reduced.component(0);
    const BreakComputation bc = analyse_extension(a);
    const FiltrationConductors f = conductor_from_filtration(bc.profile);
    OracleReport rep;
    rep.m = bc.m;
    rep.break_index = bc.break_index;
    rep.artin_formula = f.artin;
    rep.swan_formula = f.swan;
    rep.artin_conductor = c.artin;
    rep.swan_conductor = c.swan;
    rep.agree = f.artin == c.artin && f.swan == c.swan;
    return rep;
}

} // namespace swan
