#ifndef SWAN_CONDUCTOR_HPP
#define SWAN_CONDUCTOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <swan/series.hpp>
#include <swan/witt.hpp>

namespace swan {

// A character of the absolute Galois group of K = k((t)), split into its
// p-primary part (given by an Artin-Schreier-Witt representative) and a tame
// part of order prime to p.
struct Character {
    WittRep wild;
    std::uint64_t tame_order = 1;
    bool tame_ramified = false;

    // Checks p does not divide tame_order and that a ramified tame part has order > 1.
    Character(WittRep wild, std::uint64_t tame_order = 1, bool tame_ramified = false);

    const FieldPtr &field() const noexcept
    {
        return wild.field();
    }
};

// h * dlog t + sum_i g_i du_i in Omega^1_K. The du keys are exactly the
// differential variables of the field (none for a perfected field).
struct DifferentialForm {
    LocalElement dlogt;
    std::map<std::string, LocalElement> du;

    static DifferentialForm zero(const FieldPtr &field);

    DifferentialForm operator-() const;
    DifferentialForm &operator+=(const DifferentialForm &other);
    DifferentialForm &operator-=(const DifferentialForm &other);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm &b)
    {
        return a += b;
    }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm &b)
    {
        return a -= b;
    }
    friend bool operator==(const DifferentialForm &, const DifferentialForm &) = default;
};

// Pole orders of a form for the logarithmic filtration (t^-n dlog K*) and the
// ordinary one (t^-n Omega^1_A). Membership in fil_n is level <= n.
struct OmegaLevels {
    std::int64_t log_level = 0;
    std::int64_t nonlog_level = 0;
};

// Leading graded piece of phi at level n: the coefficients of t^-n in front of
// dlog t (residue_part) and of each du_i (omega_part).
struct RefinedSwan {
    std::int64_t level = 0;
    ResidueElement residue_part;
    std::map<std::string, ResidueElement> omega_part;

    friend bool operator==(const RefinedSwan &, const RefinedSwan &) = default;
};

// Least n with p^i v(a_{-i}) >= -n for every slot.
std::int64_t cw_level(const WittRep &a);

struct Reduction {
    WittRep reduced;
    // reduced = a + (F - 1)(witness)
    WittRep witness;
};

// Strip p-divisible pole orders whose leading coefficient is a p-th power.
// Always works on the slot of largest weighted pole order first, breaking
// ties toward the most negative slot.
Reduction reduce(const WittRep &a);

// Every polar slot has leading pole order prime to p or a leading
// coefficient that is not a p-th power.
bool is_reduced(const WittRep &a);

// phi(..., a_{-1}, a_0) = -sum_i a_{-i}^{p^i - 1} da_{-i}.
DifferentialForm phi(const WittRep &a);

OmegaLevels omega_levels(const DifferentialForm &omega);

std::int64_t swan(const Character &chi);
// Throws NotWildlyRamified when swan(chi) == 0.
RefinedSwan refined_swan(const Character &chi);
std::int64_t artin(const Character &chi);

// All conductors from a single reduction.
struct ConductorReport {
    std::int64_t swan = 0;
    std::int64_t artin = 0;
    std::optional<RefinedSwan> refined;
    WittRep reduced;
};
ConductorReport conductors(const Character &chi);

// Pull chi back along t -> t^e with p not dividing e. A tame part of order d
// that is totally ramified stays ramified iff d does not divide e.
Character tame_base_change(const Character &chi, std::uint64_t e);

} // namespace swan

#endif
