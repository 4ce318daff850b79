#ifndef SWAN_FP_HPP
#define SWAN_FP_HPP

#include <cstdint>
#include <stdexcept>

// Scalar arithmetic in the prime field F_p. Elements are canonical residues in [0, p).
namespace swan::fp {

using Coeff = std::uint32_t;

constexpr bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

constexpr Coeff add(Coeff a, Coeff b, Coeff p) noexcept
{
    const std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Coeff>(s >= p ? s - p : s);
}

constexpr Coeff sub(Coeff a, Coeff b, Coeff p) noexcept
{
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t(a) + p - b);
}

constexpr Coeff neg(Coeff a, Coeff p) noexcept
{
    return a == 0 ? 0 : p - a;
}

constexpr Coeff mul(Coeff a, Coeff b, Coeff p) noexcept
{
    return static_cast<Coeff>((std::uint64_t(a) * b) % p);
}

constexpr Coeff pow(Coeff a, std::uint64_t e, Coeff p) noexcept
{
    std::uint64_t r = 1 % p, b = a % p;
    while (e != 0) {
        if (e & 1U) {
            r = (r * b) % p;
        }
        b = (b * b) % p;
        e >>= 1U;
    }
    return static_cast<Coeff>(r);
}

inline Coeff inv(Coeff a, Coeff p)
{
    if (a % p == 0) {
        throw std::domain_error("inverse of zero in F_p");
    }
    return pow(a, p - 2, p);
}

// Reduce a signed integer into [0, p).
constexpr Coeff from_signed(std::int64_t v, Coeff p) noexcept
{
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Coeff>(r < 0 ? r + p : r);
}

} // namespace swan::fp

#endif
