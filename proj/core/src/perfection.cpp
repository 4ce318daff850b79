#include <swan/perfection.hpp>

#include <stdexcept>

#include <swan/errors.hpp>

namespace swan {

std::string perfection_var_name(const std::string &base, std::size_t j)
{
    return base + "_" + std::to_string(j);
}

PerfectionMap build_perfection_map(const FieldPtr &source, std::size_t depth)
{
    if (source->perfected) {
        throw std::invalid_argument("the source of a perfection map must be unperfected");
    }
    std::vector<std::string> vars;
    for (const auto &u : source->basis_vars) {
        for (std::size_t j = 0; j <= depth; ++j) {
            vars.push_back(perfection_var_name(u, j));
        }
    }
    PerfectionMap map{source, FieldConfig::make(source->p, {}, std::move(vars), true), depth, {}};
    const auto prec = static_cast<std::int64_t>(depth) + 1;
    for (const auto &u : source->basis_vars) {
        LocalElement image(map.target, prec);
        for (std::size_t j = 0; j <= depth; ++j) {
            image += LocalElement::monomial(ResidueElement::variable(map.target, perfection_var_name(u, j)),
                                            static_cast<std::int64_t>(j));
        }
        map.bindings.residue.emplace(u, std::move(image));
    }
    return map;
}

LocalElement pullback(const LocalElement &x, const PerfectionMap &map)
{
    return substitute(x, map.bindings, map.target);
}

WittRep pullback(const WittRep &a, const PerfectionMap &map)
{
    if (!same_field(a.field(), map.source)) {
        throw FieldMismatch();
    }
    WittRep r(map.target, a.length());
    for (const auto &[i, x] : a.components()) {
        r.set_component(i, pullback(x, map));
    }
    return r;
}

Character pullback(const Character &chi, const PerfectionMap &map)
{
    return Character(pullback(chi.wild, map), chi.tame_order, chi.tame_ramified);
}

DifferentialForm pullback(const DifferentialForm &omega, const PerfectionMap &map)
{
    DifferentialForm r = DifferentialForm::zero(map.target);
    r.dlogt = pullback(omega.dlogt, map);
    for (const auto &[u, g] : omega.du) {
        r.dlogt += pullback(g, map) * map.bindings.residue.at(u).log_derivative_t();
    }
    return r;
}

ConductorReport conductors_over_perfection(const Character &chi)
{
    if (!chi.field()->perfected) {
        throw std::invalid_argument("expected a character over a perfected residue field");
    }
    ConductorReport rep = conductors(chi);
    const auto p = static_cast<std::int64_t>(chi.field()->p);
    for (const auto &[i, x] : rep.reduced.components()) {
        if (const auto v = x.valuation(); v && *v < 0 && (-*v) % p == 0) {
            throw InternalInjectivityViolation("reduced representative over a perfect residue field keeps pole order "
                                               + std::to_string(-*v));
        }
    }
    if (rep.swan > 0 && rep.artin != rep.swan + 1) {
        throw InternalInjectivityViolation("refined Swan conductor over a perfect residue field has no residue part");
    }
    return rep;
}

TheoremReport verify_theorem(const Character &chi, std::optional<std::size_t> depth)
{
    const ConductorReport base = conductors(chi);
    TheoremReport rep;
    rep.swan_base = base.swan;
    rep.artin_base = base.artin;
    rep.refined_base = base.refined;

    // The reduced representative defines the same character and keeps the
    // pulled-back poles as small as possible.
    const Character reduced(base.reduced, chi.tame_order, chi.tame_ramified);
    std::size_t j = depth.value_or(static_cast<std::size_t>(base.swan) + 1);
    for (int attempt = 0;; ++attempt) {
        try {
            const ConductorReport g = conductors_over_perfection(pullback(reduced, build_perfection_map(chi.field(), j)));
            rep.swan_g = g.swan;
            rep.artin_g = g.artin;
            rep.refined_g = g.refined;
            rep.depth = j;
            break;
        } catch (const PrecisionExhausted &) {
            if (attempt == kMaxDepthDoublings) {
                throw;
            }
            j = j == 0 ? 1 : 2 * j;
        }
    }
    rep.holds = rep.artin_base == rep.artin_g;
    if (rep.swan_base > 0) {
        rep.relations_hold = rep.swan_g == rep.artin_base - 1 && rep.swan_g <= rep.swan_base;
    } else {
        rep.relations_hold = rep.swan_g == 0;
    }
    return rep;
}

} // namespace swan
