#include <swan/parse.hpp>

#include <cctype>
#include <string>

#include <swan/errors.hpp>

namespace swan {

namespace {

struct Exponent {
    std::int64_t num = 1;
    std::uint64_t den = 1;
};

class Parser {
public:
    Parser(std::string_view text, const FieldPtr &field) : text_(text), field_(field) {}

    LocalElement parse()
    {
        LocalElement r = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    LocalElement expr()
    {
        const bool negate = accept('-');
        LocalElement acc = term();
        if (negate) {
            acc = -acc;
        }
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    LocalElement term()
    {
        LocalElement acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const LocalElement d = factor();
                if (!d.is_exact() || d.terms().size() != 1) {
                    pos_ = at;
                    fail("division is only supported by a single-term series");
                }
                acc = acc * d.inverse();
            } else {
                return acc;
            }
        }
    }

    std::uint64_t unsigned_integer()
    {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer");
        }
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) {
                fail("integer literal too large");
            }
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::int64_t signed_integer()
    {
        const bool neg = accept('-');
        const std::uint64_t v = unsigned_integer();
        if (v > static_cast<std::uint64_t>(INT64_MAX)) {
            fail("exponent too large");
        }
        return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }

    Exponent exponent()
    {
        Exponent e;
        if (accept('(')) {
            e.num = signed_integer();
            if (accept('/')) {
                e.den = unsigned_integer();
                if (e.den == 0) {
                    fail("zero exponent denominator");
                }
            }
            expect(')');
        } else {
            e.num = signed_integer();
        }
        return e;
    }

    std::string identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    LocalElement factor()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        std::optional<std::size_t> var;
        LocalElement base(field_);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = unsigned_integer();
            base = LocalElement::integer(field_, static_cast<std::int64_t>(v % field_->p));
        } else if (c == '(') {
            ++pos_;
            base = expr();
            expect(')');
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            const std::string name = identifier();
            if (name == "O") {
                return big_o();
            }
            if (name == "t") {
                base = LocalElement::t_power(field_, 1);
            } else {
                var = field_->index_of(name);
                if (!var) {
                    pos_ = at;
                    fail("unknown variable '" + name + "'");
                }
                base = LocalElement::constant(ResidueElement::variable(field_, name));
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (!accept('^')) {
            return base;
        }
        const std::size_t at = pos_;
        const Exponent e = exponent();
        if (e.den != 1) {
            return fractional_power(*var_or_fail(var, at), e, at);
        }
        if (e.num >= 0) {
            return base.pow(static_cast<std::uint64_t>(e.num));
        }
        if (!base.is_exact() || base.terms().size() != 1) {
            pos_ = at;
            fail("negative power of a non-monomial");
        }
        return base.inverse().pow(static_cast<std::uint64_t>(-e.num));
    }

    const std::optional<std::size_t> &var_or_fail(const std::optional<std::size_t> &var, std::size_t at)
    {
        if (!var) {
            pos_ = at;
            fail("fractional exponents apply only to residue variables");
        }
        return var;
    }

    LocalElement fractional_power(std::size_t var, const Exponent &e, std::size_t at)
    {
        if (!field_->perfected) {
            pos_ = at;
            fail("fractional exponent in an unperfected field");
        }
        std::uint32_t scale = 0;
        std::uint64_t d = e.den;
        while (d % field_->p == 0) {
            d /= field_->p;
            ++scale;
        }
        if (d != 1) {
            pos_ = at;
            fail("exponent denominator must be a power of p");
        }
        std::vector<Polynomial::Exponent> exps(field_->num_vars(), 0);
        const std::uint64_t mag = static_cast<std::uint64_t>(e.num < 0 ? -e.num : e.num);
        if (mag > UINT32_MAX) {
            pos_ = at;
            fail("exponent too large");
        }
        exps[var] = static_cast<Polynomial::Exponent>(mag);
        const auto p = field_->p;
        const auto n = field_->num_vars();
        ResidueElement r = ResidueElement::make(field_, Polynomial::monomial(p, exps, 1), Polynomial::constant(p, n, 1),
                                                scale);
        return LocalElement::constant(e.num < 0 ? r.inverse() : r);
    }

    LocalElement big_o()
    {
        expect('(');
        const std::size_t at = pos_;
        const LocalElement inner = expr();
        expect(')');
        if (!inner.is_exact() || inner.terms().size() != 1 || !inner.terms().begin()->second.is_one()) {
            pos_ = at;
            fail("O(...) takes a power of t");
        }
        return LocalElement(field_, inner.terms().begin()->first);
    }

    std::string_view text_;
    const FieldPtr &field_;
    std::size_t pos_ = 0;
};

} // namespace

LocalElement parse_series(std::string_view text, const FieldPtr &field)
{
    return Parser(text, field).parse();
}

ResidueElement parse_residue(std::string_view text, const FieldPtr &field)
{
    const LocalElement s = parse_series(text, field);
    if (!s.is_exact()) {
        throw ParseError("residue elements carry no precision term", 0);
    }
    if (s.is_zero()) {
        return ResidueElement(field);
    }
    if (s.terms().size() != 1 || s.terms().begin()->first != 0) {
        throw ParseError("expected an element of the residue field", 0);
    }
    return s.terms().begin()->second;
}

} // namespace swan
