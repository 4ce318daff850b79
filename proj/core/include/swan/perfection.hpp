#ifndef SWAN_PERFECTION_HPP
#define SWAN_PERFECTION_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <swan/conductor.hpp>

namespace swan {

// Truncation at depth J of the embedding K = k((t)) -> K^g sending each
// p-basis element u_i to u_i_0 + u_i_1 t + ... + u_i_J t^J + O(t^(J+1)), with
// t fixed. The target residue field is the perfection of F_p(u_i_j).
struct PerfectionMap {
    FieldPtr source;
    FieldPtr target;
    std::size_t depth = 0;
    Bindings bindings;
};

// Name of the j-th coefficient variable attached to basis variable `base`.
std::string perfection_var_name(const std::string &base, std::size_t j);

PerfectionMap build_perfection_map(const FieldPtr &source, std::size_t depth);

LocalElement pullback(const LocalElement &x, const PerfectionMap &map);
WittRep pullback(const WittRep &a, const PerfectionMap &map);
// Tame data is carried over unchanged.
Character pullback(const Character &chi, const PerfectionMap &map);

// h dlog t + sum g_i du_i  ->  (h + sum g_i t d(b_i)/dt) dlog t, where b_i is
// the image of u_i; the target has no du terms.
DifferentialForm pullback(const DifferentialForm &omega, const PerfectionMap &map);

// Conductors of a character over a perfected residue field. Also checks what
// perfectness forces: artin = swan + 1 when ramified, and the reduced
// representative has every pole order prime to p.
ConductorReport conductors_over_perfection(const Character &chi);

struct TheoremReport {
    std::int64_t swan_base = 0;
    std::int64_t artin_base = 0;
    std::int64_t swan_g = 0;
    std::int64_t artin_g = 0;
    bool holds = false;
    // swan_g = artin_base - 1 when wildly ramified, swan_g = 0 otherwise.
    bool relations_hold = false;
    std::size_t depth = 0;
    std::optional<RefinedSwan> refined_base;
    std::optional<RefinedSwan> refined_g;
};

inline constexpr int kMaxDepthDoublings = 4;

// Compares ar over K with ar over K^g. Depth defaults to swan + 1 and is
// doubled (at most kMaxDepthDoublings times) while precision runs out.
TheoremReport verify_theorem(const Character &chi, std::optional<std::size_t> depth = std::nullopt);

} // namespace swan

#endif
