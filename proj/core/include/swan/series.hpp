#ifndef SWAN_SERIES_HPP
#define SWAN_SERIES_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include <swan/field.hpp>

namespace swan {

// Precision of an element known exactly (a Laurent polynomial in t).
inline constexpr std::int64_t kExactPrecision = std::numeric_limits<std::int64_t>::max();

// Relative precision used when inverting an exact series that is not a monomial.
inline constexpr std::int64_t kDefaultRelativePrecision = 32;

// Saturating addition on precisions, treating kExactPrecision as +infinity.
std::int64_t add_precision(std::int64_t a, std::int64_t b) noexcept;

// Truncated Laurent series sum_j c_j t^j + O(t^prec) over a residue field.
//
// Only exponents below `prec` are stored, and only nonzero coefficients. An
// element without stored terms is "zero so far": it has no valuation and
// consumers must decide what O(t^prec) means for them. Precision arithmetic is
// pessimistic; anything that would need an unknown coefficient throws
// PrecisionExhausted.
class LocalElement {
public:
    using Terms = std::map<std::int64_t, ResidueElement>;

    explicit LocalElement(FieldPtr field, std::int64_t prec = kExactPrecision);
    LocalElement(FieldPtr field, Terms terms, std::int64_t prec = kExactPrecision);

    static LocalElement constant(const ResidueElement &c);
    static LocalElement monomial(const ResidueElement &c, std::int64_t exp);
    static LocalElement t_power(const FieldPtr &field, std::int64_t exp);
    static LocalElement integer(const FieldPtr &field, std::int64_t c);

    const FieldPtr &field() const noexcept
    {
        return field_;
    }
    std::int64_t precision() const noexcept
    {
        return prec_;
    }
    bool is_exact() const noexcept
    {
        return prec_ == kExactPrecision;
    }
    const Terms &terms() const noexcept
    {
        return terms_;
    }
    // No known nonzero coefficient.
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_exact_zero() const noexcept
    {
        return terms_.empty() && is_exact();
    }

    // Least exponent with a nonzero coefficient; nullopt when zero so far.
    std::optional<std::int64_t> valuation() const;
    // valuation() if known, otherwise precision(): a lower bound for the true valuation.
    std::int64_t valuation_bound() const noexcept;
    // Pre: !is_zero().
    const ResidueElement &leading_coefficient() const;
    // Throws PrecisionExhausted if exp >= precision().
    ResidueElement coefficient(std::int64_t exp) const;

    LocalElement operator-() const;
    LocalElement &operator+=(const LocalElement &other);
    LocalElement &operator-=(const LocalElement &other);
    friend LocalElement operator+(LocalElement a, const LocalElement &b)
    {
        return a += b;
    }
    friend LocalElement operator-(LocalElement a, const LocalElement &b)
    {
        return a -= b;
    }
    friend LocalElement operator*(const LocalElement &a, const LocalElement &b);
    LocalElement &operator*=(const LocalElement &other)
    {
        return *this = *this * other;
    }
    friend bool operator==(const LocalElement &a, const LocalElement &b);

    LocalElement scaled(const ResidueElement &c) const;
    // Multiply by t^k.
    LocalElement shifted(std::int64_t k) const;
    LocalElement truncated(std::int64_t prec) const;
    // Throws ZeroInverse on an exact zero and PrecisionExhausted on an inexact
    // zero. `relative_precision` only matters for exact non-monomial input.
    LocalElement inverse(std::int64_t relative_precision = kDefaultRelativePrecision) const;
    LocalElement pow(std::uint64_t n) const;
    // x^p, computed coefficientwise; the precision scales by p.
    LocalElement frobenius() const;

    // Coefficient of dlog t in dx, i.e. sum_j j c_j t^j.
    LocalElement log_derivative_t() const;
    // Coefficient of du in dx for the basis variable `var`.
    LocalElement partial_derivative(const std::string &var) const;
    LocalElement map_coefficients(const std::function<ResidueElement(const ResidueElement &)> &fn) const;

    std::string to_string() const;

private:
    void check_field(const LocalElement &other) const;

    FieldPtr field_;
    Terms terms_;
    std::int64_t prec_;
};

// Binding targets for substitute(). Residue variables of the source field are
// looked up by name; `t` optionally rebinds the uniformizer.
struct Bindings {
    std::map<std::string, LocalElement> residue;
    std::optional<LocalElement> t;
};

// Substitute series for the residue variables and/or t of `f`, producing an
// element over `target`. Unbound residue variables must exist in `target`
// under the same name and map to themselves. Residue bindings need valuation
// >= 0 and a t binding valuation >= 1 (InvalidBindingValuation otherwise).
LocalElement substitute(const LocalElement &f, const Bindings &bindings, const FieldPtr &target,
                        std::int64_t relative_precision = kDefaultRelativePrecision);

} // namespace swan

#endif
