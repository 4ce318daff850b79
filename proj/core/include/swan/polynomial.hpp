#ifndef SWAN_POLYNOMIAL_HPP
#define SWAN_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <swan/fp.hpp>

namespace swan {

// Sparse multivariate polynomial over F_p in a fixed number of variables.
//
// Terms are kept sorted in strictly decreasing lexicographic order of their
// exponent vectors (variable 0 most significant) with nonzero coefficients, so
// two polynomials are equal iff their storage is equal. Exponent vectors are
// stored row-major in one flat buffer.
class Polynomial {
public:
    using Coeff = fp::Coeff;
    using Exponent = std::uint32_t;

    Polynomial(Coeff p, std::size_t nvars);

    static Polynomial constant(Coeff p, std::size_t nvars, Coeff c);
    static Polynomial variable(Coeff p, std::size_t nvars, std::size_t var, Exponent e = 1);
    static Polynomial monomial(Coeff p, std::span<const Exponent> exps, Coeff c);
    // Terms may be unsorted and repeated; coefficients are taken mod p.
    static Polynomial from_terms(Coeff p, std::size_t nvars, std::vector<Exponent> exps, std::vector<Coeff> coeffs);

    Coeff characteristic() const noexcept
    {
        return p_;
    }
    std::size_t num_vars() const noexcept
    {
        return nvars_;
    }
    std::size_t size() const noexcept
    {
        return coeffs_.size();
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    bool is_monomial() const noexcept
    {
        return coeffs_.size() == 1;
    }

    std::span<const Exponent> exponents(std::size_t term) const noexcept
    {
        return {exps_.data() + term * nvars_, nvars_};
    }
    Coeff coeff(std::size_t term) const noexcept
    {
        return coeffs_[term];
    }
    // Coefficient of the lexicographically largest monomial; 0 for the zero polynomial.
    Coeff leading_coeff() const noexcept
    {
        return coeffs_.empty() ? 0 : coeffs_.front();
    }
    // Value of the constant term (0 if absent).
    Coeff constant_term() const noexcept;

    Exponent degree(std::size_t var) const noexcept;
    Exponent total_degree() const noexcept;
    // Componentwise minimum of all exponent vectors (the largest monomial dividing every term).
    std::vector<Exponent> monomial_content() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    Polynomial scaled(Coeff c) const;
    Polynomial shifted(std::span<const Exponent> mono, Coeff c) const;
    Polynomial pow(std::uint64_t n) const;
    Polynomial derivative(std::size_t var) const;
    // Substitute every variable v -> v^factor.
    Polynomial inflate(Exponent factor) const;
    bool exponents_divisible_by(Exponent q) const noexcept;
    // Inverse of inflate; requires exponents_divisible_by(q).
    Polynomial deflate(Exponent q) const;
    // f(x)^p computed as f(x^p): valid because Frobenius fixes F_p.
    Polynomial frobenius() const
    {
        return inflate(p_);
    }
    // Divide by the monic-normalizing scalar so that leading_coeff() == 1.
    Polynomial monic() const;

    // As a polynomial in `var` with coefficients in the remaining variables:
    // element d is the coefficient of var^d.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(const std::vector<Polynomial> &coeffs, std::size_t var);

private:
    void canonicalize(std::vector<Exponent> exps, std::vector<Coeff> coeffs);
    Polynomial merged(const Polynomial &other, bool subtract) const;

    Coeff p_;
    std::size_t nvars_;
    std::vector<Exponent> exps_;
    std::vector<Coeff> coeffs_;
};

// Quotient a / b when b divides a exactly, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial &a, const Polynomial &b);

// Monic greatest common divisor. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

} // namespace swan

#endif
