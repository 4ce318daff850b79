#ifndef SWAN_FIELD_HPP
#define SWAN_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <swan/polynomial.hpp>

namespace swan {

// Description of a residue field.
//
// An unperfected config is k = F_p(basis_vars), whose p-basis is basis_vars.
// A perfected config is the perfection of F_p(basis_vars, perfection_vars);
// its Kähler differentials vanish and every element has a p-th root. Elements
// of either kind reference their config through a shared pointer.
struct FieldConfig {
    fp::Coeff p = 2;
    std::vector<std::string> basis_vars;
    std::vector<std::string> perfection_vars;
    bool perfected = false;

    // Validates the invariants (p prime, distinct identifier-like names, an
    // unperfected field carries no perfection variables).
    static std::shared_ptr<const FieldConfig> make(fp::Coeff p, std::vector<std::string> basis_vars,
                                                   std::vector<std::string> perfection_vars = {},
                                                   bool perfected = false);

    std::size_t num_vars() const noexcept
    {
        return basis_vars.size() + perfection_vars.size();
    }
    // Basis variables come first, then perfection variables.
    const std::string &var_name(std::size_t i) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    // Variables u with du a basis element of the absolute differentials of the field.
    std::vector<std::string> differential_vars() const;

    friend bool operator==(const FieldConfig &, const FieldConfig &) = default;
};

using FieldPtr = std::shared_ptr<const FieldConfig>;

bool same_field(const FieldPtr &a, const FieldPtr &b) noexcept;

// Exact element of a residue field, stored as a reduced fraction num/den of
// polynomials over F_p together with a scale m: the represented value is
// num(v^(1/p^m)) / den(v^(1/p^m)). The denominator's lexicographically first
// monomial has coefficient 1 and m is minimal, so equality is structural.
class ResidueElement {
public:
    explicit ResidueElement(FieldPtr field);

    // Canonicalizing constructor. Throws ZeroDenominator.
    static ResidueElement make(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale = 0);
    static ResidueElement constant(FieldPtr field, std::int64_t c);
    static ResidueElement variable(FieldPtr field, std::string_view name);

    const FieldPtr &field() const noexcept
    {
        return field_;
    }
    const Polynomial &numerator() const noexcept
    {
        return num_;
    }
    const Polynomial &denominator() const noexcept
    {
        return den_;
    }
    std::uint32_t scale() const noexcept
    {
        return scale_;
    }

    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_one() const noexcept
    {
        return num_.is_one() && den_.is_one();
    }
    // True for elements of the prime field.
    bool is_constant() const noexcept
    {
        return num_.is_constant() && den_.is_constant();
    }

    ResidueElement operator-() const;
    ResidueElement &operator+=(const ResidueElement &other);
    ResidueElement &operator-=(const ResidueElement &other);
    ResidueElement &operator*=(const ResidueElement &other);
    ResidueElement &operator/=(const ResidueElement &other);
    friend ResidueElement operator+(ResidueElement a, const ResidueElement &b)
    {
        return a += b;
    }
    friend ResidueElement operator-(ResidueElement a, const ResidueElement &b)
    {
        return a -= b;
    }
    friend ResidueElement operator*(ResidueElement a, const ResidueElement &b)
    {
        return a *= b;
    }
    friend ResidueElement operator/(ResidueElement a, const ResidueElement &b)
    {
        return a /= b;
    }
    friend bool operator==(const ResidueElement &a, const ResidueElement &b);

    ResidueElement scaled(std::int64_t c) const;
    ResidueElement inverse() const;
    ResidueElement pow(std::int64_t n) const;
    ResidueElement frobenius() const;

    bool is_pth_power() const;
    // Throws NotAPthPower in an unperfected field when no root exists.
    ResidueElement pth_root() const;
    // Throws UnknownVariable unless `var` is a p-basis variable of an unperfected field.
    ResidueElement partial_derivative(std::string_view var) const;

    std::string to_string() const;

private:
    ResidueElement(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale);
    // Bring both operands to a common scale; returns (num_a, den_a, num_b, den_b, scale).
    struct Aligned;
    Aligned align(const ResidueElement &other) const;
    void check_field(const ResidueElement &other) const;
    // Normalize the denominator's leading coefficient and minimize the scale.
    void finish();

    FieldPtr field_;
    Polynomial num_;
    Polynomial den_;
    std::uint32_t scale_ = 0;
};

// Free-function form of the canonical constructor.
ResidueElement rf_normalize(FieldPtr field, Polynomial num, Polynomial den, std::uint32_t scale = 0);

// Printing helpers shared with the series printer. Exponents are shown as
// reduced fractions e / p^scale.
std::string polynomial_to_string(const Polynomial &f, const FieldConfig &field, std::uint32_t scale);

} // namespace swan

#endif
