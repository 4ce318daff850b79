#ifndef SWAN_RANDOM_HPP
#define SWAN_RANDOM_HPP

#include <cstdint>
#include <random>

#include <swan/conductor.hpp>

namespace swan {

// Seeded source for every random choice in the library. Draws are raw
// std::mt19937_64 outputs reduced with `% n`, so a seed reproduces the same
// objects on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next()
    {
        return engine_();
    }
    // Uniform-ish in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        return engine_() % n;
    }
    // In [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den)
    {
        return below(den) < num;
    }

    // Independent stream for sub-task `index`; lets parallel trials stay deterministic.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
};

struct CharacterOptions {
    std::size_t witt_length = 2;
    // Bounds the Swan level: slot -i has pole order at most pole_bound / p^i.
    std::int64_t pole_bound = 20;
    bool require_ramified = true;
    bool allow_tame = true;
    // Permit coefficients with a linear denominator.
    bool rational_coefficients = false;
};

// Nonzero residue element: a constant, a sparse polynomial, a p-th power of
// one, or (optionally) such a polynomial over a linear denominator.
ResidueElement random_residue(Rng &rng, const FieldPtr &field, bool rational = false);

// c t^-m plus up to two further terms of exponent in (-m, 2]. Exact.
LocalElement random_series(Rng &rng, const FieldPtr &field, std::int64_t pole, bool rational = false);

// Random Witt vector of the given length whose slot -i has pole order at
// most level / p^i (possibly integral or zero).
WittRep random_witt(Rng &rng, const FieldPtr &field, std::size_t length, std::int64_t level,
                    bool rational = false);

Character random_character(Rng &rng, const FieldPtr &field, const CharacterOptions &opts);

// Form whose components have pole order at most `pole`, each possibly zero.
DifferentialForm random_form(Rng &rng, const FieldPtr &field, std::int64_t pole);

} // namespace swan

#endif
