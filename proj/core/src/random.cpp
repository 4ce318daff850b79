#include <swan/random.hpp>

#include <algorithm>

namespace swan {

namespace {

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

ResidueElement random_constant(Rng &rng, const FieldPtr &field)
{
    return ResidueElement::constant(field, rng.between(1, static_cast<std::int64_t>(field->p) - 1));
}

// One or two monomials of degree at most one in each variable.
ResidueElement random_polynomial(Rng &rng, const FieldPtr &field)
{
    const std::size_t n = field->num_vars();
    ResidueElement r(field);
    const auto terms = rng.between(1, 2);
    for (std::int64_t k = 0; k < terms; ++k) {
        ResidueElement m = random_constant(rng, field);
        for (std::size_t v = 0; v < n; ++v) {
            if (rng.chance(1, 2)) {
                m *= ResidueElement::variable(field, field->var_name(v));
            }
        }
        r += m;
    }
    return r.is_zero() ? ResidueElement::constant(field, 1) : r;
}

std::int64_t level_share(std::int64_t level, fp::Coeff p, std::size_t slot)
{
    for (std::size_t k = 0; k < slot; ++k) {
        level /= p;
    }
    return level;
}

} // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix(seed ^ splitmix(index + 1)));
}

ResidueElement random_residue(Rng &rng, const FieldPtr &field, bool rational)
{
    if (field->num_vars() == 0) {
        return random_constant(rng, field);
    }
    switch (rng.below(8)) {
    case 0:
    case 1:
        return random_constant(rng, field);
    case 2:
    case 3:
        return random_polynomial(rng, field).frobenius();
    case 4:
        if (rational) {
            const auto v = ResidueElement::variable(field, field->var_name(rng.below(field->num_vars())));
            return random_polynomial(rng, field) / (v + random_constant(rng, field));
        }
        [[fallthrough]];
    default:
        return random_polynomial(rng, field);
    }
}

LocalElement random_series(Rng &rng, const FieldPtr &field, std::int64_t pole, bool rational)
{
    LocalElement x = LocalElement::monomial(random_residue(rng, field, rational), -pole);
    const auto extra = rng.between(0, 2);
    for (std::int64_t k = 0; k < extra; ++k) {
        const std::int64_t e = rng.between(-pole + 1, 2);
        x += LocalElement::monomial(random_residue(rng, field, rational), e);
    }
    return x;
}

WittRep random_witt(Rng &rng, const FieldPtr &field, std::size_t length, std::int64_t level, bool rational)
{
    WittRep w(field, length);
    for (std::size_t i = 0; i < length; ++i) {
        if (rng.chance(1, 4)) {
            continue;
        }
        const std::int64_t bound = level_share(level, field->p, i);
        w.set_component(i, random_series(rng, field, rng.between(0, bound), rational));
    }
    return w;
}

Character random_character(Rng &rng, const FieldPtr &field, const CharacterOptions &opts)
{
    const auto p = field->p;
    const auto length = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(opts.witt_length)));
    WittRep w(field, length);
    // Poles can cancel under reduction (t^-8 + t^-1 is trivial at p = 2), so
    // ramification is checked on the reduced class and the draw repeated.
    do {
        w = WittRep(field, length);
        for (std::size_t i = 0; i < length; ++i) {
            const std::int64_t pole = rng.between(0, level_share(opts.pole_bound, p, i));
            if (pole == 0 && rng.chance(1, 2)) {
                continue;
            }
            w.set_component(i, random_series(rng, field, pole, opts.rational_coefficients));
        }
    } while (opts.require_ramified && opts.pole_bound > 0 && cw_level(reduce(w).reduced) == 0);
    std::uint64_t order = 1;
    bool ramified = false;
    if (opts.allow_tame && rng.chance(1, 3)) {
        do {
            order = static_cast<std::uint64_t>(rng.between(2, 12));
        } while (order % p == 0);
        ramified = rng.chance(1, 2);
    }
    return Character(std::move(w), order, ramified);
}

DifferentialForm random_form(Rng &rng, const FieldPtr &field, std::int64_t pole)
{
    DifferentialForm w = DifferentialForm::zero(field);
    if (!rng.chance(1, 4)) {
        w.dlogt = random_series(rng, field, rng.between(0, pole));
    }
    for (auto &[v, g] : w.du) {
        if (!rng.chance(1, 4)) {
            g = random_series(rng, field, rng.between(0, pole));
        }
    }
    return w;
}

} // namespace swan
