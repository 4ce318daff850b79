#ifndef SWAN_WITT_HPP
#define SWAN_WITT_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <swan/polynomial.hpp>
#include <swan/series.hpp>

namespace swan {

// Longest supported Witt vectors. The structure polynomials grow quickly with
// the length, so the library stays at desk scale.
inline constexpr std::size_t kMaxWittLength = 3;

using BigInt = boost::multiprecision::cpp_int;

// Polynomial with arbitrary-size integer coefficients, keyed by exponent vector.
struct IntPolynomial {
    std::size_t nvars = 0;
    std::map<std::vector<std::uint32_t>, BigInt> terms;

    BigInt evaluate(const std::vector<BigInt> &point) const;
    Polynomial reduce_mod(fp::Coeff p) const;
};

// Universal Witt addition and negation polynomials for W_s over Z.
//
// add[n] is a polynomial in X_0..X_{s-1}, Y_0..Y_{s-1} (variables 0..s-1 and
// s..2s-1) with w_n(add[0..n]) = w_n(X) + w_n(Y), where
// w_n(Z) = sum_{i<=n} p^i Z_i^{p^(n-i)} is the n-th ghost component. neg[n]
// is a polynomial in X_0..X_{s-1} with w_n(neg) = -w_n(X). The *_mod_p
// copies are what evaluation over characteristic-p series uses.
struct WittPolynomials {
    fp::Coeff p = 2;
    std::size_t length = 1;
    std::vector<IntPolynomial> add_polys;
    std::vector<IntPolynomial> neg_polys;
    std::vector<Polynomial> add_mod_p;
    std::vector<Polynomial> neg_mod_p;
};

// Computed once per (p, s) by the ghost-component recursion and cached; the
// cache is safe to use from several threads.
std::shared_ptr<const WittPolynomials> build_structure_polynomials(fp::Coeff p, std::size_t length);

// Element of CW(K) in co-Witt coordinates (..., 0, a_{-s+1}, ..., a_{-1}, a_0).
//
// component(i) is a_{-i}. As a Witt vector of length s, a_{-i} is the Witt
// component with index s-1-i, so a_0 is the last Witt coordinate and the
// most negative slot is the first one. Components that are exactly zero are
// not stored; an inexact zero O(t^N) is kept so its precision is not lost.
class WittRep {
public:
    WittRep(FieldPtr field, std::size_t length);

    // Slots listed from the most negative (a_{-s+1}) to a_0.
    static WittRep from_slots(const FieldPtr &field, const std::vector<LocalElement> &slots);

    const FieldPtr &field() const noexcept
    {
        return field_;
    }
    std::size_t length() const noexcept
    {
        return length_;
    }
    // a_{-i}; exact zero when absent. Pre: i < length().
    LocalElement component(std::size_t i) const;
    void set_component(std::size_t i, LocalElement value);
    const std::map<std::size_t, LocalElement> &components() const noexcept
    {
        return components_;
    }
    // Slots from the most negative to a_0 (the inverse of from_slots).
    std::vector<LocalElement> slots() const;
    bool is_zero() const noexcept
    {
        return components_.empty();
    }
    // Same class, viewed with more leading zero slots.
    WittRep padded(std::size_t length) const;

    friend bool operator==(const WittRep &a, const WittRep &b);

private:
    FieldPtr field_;
    std::size_t length_;
    std::map<std::size_t, LocalElement> components_;
};

WittRep witt_add(const WittRep &a, const WittRep &b);
WittRep witt_neg(const WittRep &a);
WittRep witt_sub(const WittRep &a, const WittRep &b);
// n * a by repeated doubling; n >= 0.
WittRep witt_multiply(const WittRep &a, std::uint64_t n);

// Raises every component to the p-th power.
WittRep frobenius(const WittRep &a);
// Standard Verschiebung on W_s, (x_0, ..., x_{s-1}) -> (0, x_0, ..., x_{s-2}):
// a_{-i} moves to slot -(i-1) and a_0 drops out. F V = V F = p.
WittRep verschiebung(const WittRep &a);
// F(w) - w; its image in H^1 is trivial.
WittRep apply_F_minus_1(const WittRep &w);

} // namespace swan

#endif
