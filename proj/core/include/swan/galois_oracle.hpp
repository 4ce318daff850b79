#ifndef SWAN_GALOIS_ORACLE_HPP
#define SWAN_GALOIS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include <swan/conductor.hpp>

namespace swan {

// Lower-numbering ramification data of a rank-one character: |G_i| for
// i = 0, 1, ... and codim of the invariants of G_i (1 while G_i acts
// nontrivially). The last entry of group_orders is 1.
struct RamificationProfile {
    std::int64_t e = 1;
    std::vector<std::int64_t> group_orders;
    std::vector<int> codims;

    friend bool operator==(const RamificationProfile &, const RamificationProfile &) = default;
};

// Everything read off the extension B = K[beta]/(beta^p - beta - a).
struct BreakComputation {
    std::int64_t m = 0;           // -v(a)
    std::int64_t alpha = 0;       // pi_B = t^gamma beta^alpha
    std::int64_t gamma = 0;
    std::int64_t v_pi = 0;        // v_B(pi_B), must be 1
    std::int64_t v_t = 0;         // v_B(t), the ramification index
    std::vector<std::int64_t> i_sigma; // v_B(sigma^j pi_B - pi_B) for j = 1..p-1
    std::int64_t break_index = 0; // largest i with G_i nontrivial
    RamificationProfile profile;
};

// Throws UnsupportedCase unless v(a) = -m with m > 0 and p not dividing m.
BreakComputation analyse_extension(const LocalElement &a);

std::int64_t ramification_break(const LocalElement &a);

struct FiltrationConductors {
    std::int64_t artin = 0;
    std::int64_t swan = 0;
};

// e^-1 sum_{i>=0} |G_i| codim and the same sum over i >= 1.
FiltrationConductors conductor_from_filtration(const RamificationProfile &profile);

struct OracleReport {
    std::int64_t m = 0;
    std::int64_t break_index = 0;
    std::int64_t artin_formula = 0;
    std::int64_t swan_formula = 0;
    std::int64_t artin_conductor = 0;
    std::int64_t swan_conductor = 0;
    bool agree = false;
};

// Needs a trivial tame part and a wild part reducing to one slot c t^-m + ...
// with p not dividing m.
OracleReport oracle_check(const Character &chi);

} // namespace swan

#endif
