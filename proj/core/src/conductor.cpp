#include <swan/conductor.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <swan/errors.hpp>

namespace swan {

namespace {

std::int64_t weight(fp::Coeff p, std::size_t slot)
{
    std::int64_t w = 1;
    for (std::size_t k = 0; k < slot; ++k) {
        w *= p;
    }
    return w;
}

// Pole order of a slot, 0 when integral. Throws if the answer depends on unknown coefficients.
std::int64_t pole_order(const LocalElement &x)
{
    if (const auto v = x.valuation()) {
        return std::max<std::int64_t>(0, -*v);
    }
    if (x.precision() < 0) {
        throw PrecisionExhausted("slot known only to O(t^" + std::to_string(x.precision()) + ")",
                                 -x.precision());
    }
    return 0;
}

// Lower bound min(val(x) + shift) contribution to a level, i.e. max(0, -(val + shift)).
std::int64_t level_of(const LocalElement &x, std::int64_t shift)
{
    if (const auto v = x.valuation()) {
        return std::max<std::int64_t>(0, -(*v + shift));
    }
    if (x.is_exact()) {
        return 0;
    }
    if (add_precision(x.precision(), shift) < 0) {
        throw PrecisionExhausted("form coefficient known only to O(t^" + std::to_string(x.precision()) + ")",
                                 -add_precision(x.precision(), shift));
    }
    return 0;
}

constexpr int kMaxReductionSteps = 100000;

} // namespace

Character::Character(WittRep wild_part, std::uint64_t order, bool ramified)
    : wild(std::move(wild_part)), tame_order(order), tame_ramified(ramified)
{
    if (tame_order == 0 || tame_order % wild.field()->p == 0) {
        throw std::invalid_argument("tame order must be positive and prime to p");
    }
    if (tame_ramified && tame_order == 1) {
        throw std::invalid_argument("a ramified tame part needs order > 1");
    }
}

DifferentialForm DifferentialForm::zero(const FieldPtr &field)
{
    DifferentialForm w{LocalElement(field), {}};
    for (const auto &v : field->differential_vars()) {
        w.du.emplace(v, LocalElement(field));
    }
    return w;
}

DifferentialForm DifferentialForm::operator-() const
{
    DifferentialForm r{-dlogt, {}};
    for (const auto &[v, g] : du) {
        r.du.emplace(v, -g);
    }
    return r;
}

DifferentialForm &DifferentialForm::operator+=(const DifferentialForm &other)
{
    dlogt += other.dlogt;
    for (const auto &[v, g] : other.du) {
        auto it = du.find(v);
        if (it == du.end()) {
            du.emplace(v, g);
        } else {
            it->second += g;
        }
    }
    return *this;
}

DifferentialForm &DifferentialForm::operator-=(const DifferentialForm &other)
{
    return *this += -other;
}

std::int64_t cw_level(const WittRep &a)
{
    std::int64_t level = 0;
    for (const auto &[i, x] : a.components()) {
        level = std::max(level, weight(a.field()->p, i) * pole_order(x));
    }
    return level;
}

bool is_reduced(const WittRep &a)
{
    const auto p = static_cast<std::int64_t>(a.field()->p);
    for (const auto &[i, x] : a.components()) {
        const std::int64_t m = pole_order(x);
        if (m > 0 && m % p == 0 && x.leading_coefficient().is_pth_power()) {
            return false;
        }
    }
    return true;
}

Reduction reduce(const WittRep &a)
{
    const FieldPtr &field = a.field();
    const auto p = static_cast<std::int64_t>(field->p);
    Reduction r{a, WittRep(field, a.length())};
    for (int step = 0;; ++step) {
        if (step == kMaxReductionSteps) {
            throw std::logic_error("reduction did not terminate");
        }
        std::optional<std::size_t> best_slot;
        std::int64_t best_level = -1;
        for (const auto &[i, x] : r.reduced.components()) {
            const std::int64_t m = pole_order(x);
            if (m == 0 || m % p != 0 || !x.leading_coefficient().is_pth_power()) {
                continue;
            }
            const std::int64_t level = weight(field->p, i) * m;
            // Components iterate from slot 0 outward, so >= prefers the most negative slot on ties.
            if (level >= best_level) {
                best_level = level;
                best_slot = i;
            }
        }
        if (!best_slot) {
            return r;
        }
        const LocalElement &x = r.reduced.components().at(*best_slot);
        const std::int64_t m = -*x.valuation();
        WittRep step_vec(field, r.reduced.length());
        step_vec.set_component(*best_slot, LocalElement::monomial(x.leading_coefficient().pth_root(), -m / p));
        r.reduced = witt_sub(r.reduced, apply_F_minus_1(step_vec));
        r.witness = witt_sub(r.witness, step_vec);
    }
}

DifferentialForm phi(const WittRep &a)
{
    const FieldPtr &field = a.field();
    DifferentialForm omega = DifferentialForm::zero(field);
    for (const auto &[i, x] : a.components()) {
        const std::uint64_t e = static_cast<std::uint64_t>(weight(field->p, i)) - 1;
        const LocalElement factor = x.pow(e);
        omega.dlogt -= factor * x.log_derivative_t();
        for (auto &[v, g] : omega.du) {
            g -= factor * x.partial_derivative(v);
        }
    }
    return omega;
}

OmegaLevels omega_levels(const DifferentialForm &omega)
{
    // h dlog t = (h / t) dt, so the ordinary pole order of that part is one more.
    OmegaLevels lv{level_of(omega.dlogt, 0), level_of(omega.dlogt, -1)};
    for (const auto &[v, g] : omega.du) {
        const std::int64_t l = level_of(g, 0);
        lv.log_level = std::max(lv.log_level, l);
        lv.nonlog_level = std::max(lv.nonlog_level, l);
    }
    return lv;
}

ConductorReport conductors(const Character &chi)
{
    Reduction red = reduce(chi.wild);
    ConductorReport rep{cw_level(red.reduced), 0, std::nullopt, std::move(red.reduced)};
    if (rep.swan == 0) {
        rep.artin = chi.tame_ramified ? 1 : 0;
        return rep;
    }
    const DifferentialForm omega = phi(rep.reduced);
    const std::int64_t n = rep.swan;
    RefinedSwan rsw{n, omega.dlogt.coefficient(-n), {}};
    bool nonzero = !rsw.residue_part.is_zero();
    for (const auto &[v, g] : omega.du) {
        auto c = g.coefficient(-n);
        nonzero = nonzero || !c.is_zero();
        rsw.omega_part.emplace(v, std::move(c));
    }
    if (!nonzero) {
        throw InternalInjectivityViolation("graded phi vanishes at level " + std::to_string(n)
                                           + " for a reduced representative");
    }
    rep.artin = rsw.residue_part.is_zero() ? n : n + 1;
    rep.refined = std::move(rsw);
    return rep;
}

std::int64_t swan(const Character &chi)
{
    return cw_level(reduce(chi.wild).reduced);
}

RefinedSwan refined_swan(const Character &chi)
{
    auto rep = conductors(chi);
    if (!rep.refined) {
        throw NotWildlyRamified();
    }
    return std::move(*rep.refined);
}

std::int64_t artin(const Character &chi)
{
    return conductors(chi).artin;
}

Character tame_base_change(const Character &chi, std::uint64_t e)
{
    if (e == 0) {
        throw std::invalid_argument("ramification index must be positive");
    }
    if (e % chi.field()->p == 0) {
        throw WildBaseChangeUnsupported(e);
    }
    Bindings b;
    b.t = LocalElement::t_power(chi.field(), static_cast<std::int64_t>(e));
    WittRep wild(chi.field(), chi.wild.length());
    for (const auto &[i, x] : chi.wild.components()) {
        wild.set_component(i, substitute(x, b, chi.field()));
    }
    const bool ramified = chi.tame_ramified && e % chi.tame_order != 0;
    return Character(std::move(wild), chi.tame_order, ramified);
}

} // namespace swan
