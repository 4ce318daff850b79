#ifndef SWAN_ERRORS_HPP
#define SWAN_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swan {

// Base of every error raised by the library. Callers that only care about
// "the computation failed" can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("zero denominator") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotAPthPower : public Error {
public:
    explicit NotAPthPower(const std::string &what) : Error("not a p-th power: " + what) {}
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string &name) : Error("unknown or non-basis variable: " + name) {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands live in different fields") {}
};

class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("inverse of zero series") {}
};

// Raised whenever a coefficient needed by an operation lies at or beyond the
// precision of its operand. `deficit` is how many more powers of t would have
// been needed (>= 1); callers that control input precision use it in messages.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string &what, std::int64_t deficit = 1)
        : Error("precision exhausted: " + what), deficit_(deficit < 1 ? 1 : deficit)
    {
    }
    std::int64_t deficit() const noexcept
    {
        return deficit_;
    }

private:
    std::int64_t deficit_;
};

class InvalidBindingValuation : public Error {
public:
    explicit InvalidBindingValuation(const std::string &what) : Error("invalid binding valuation: " + what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t pos)
        : Error("parse error at offset " + std::to_string(pos) + ": " + what), pos_(pos)
    {
    }
    std::size_t position() const noexcept
    {
        return pos_;
    }

private:
    std::size_t pos_;
};

class NotWildlyRamified : public Error {
public:
    NotWildlyRamified() : Error("character is not wildly ramified (swan = 0)") {}
};

// The top graded piece of phi vanished for a reduced, wildly ramified vector.
// That would contradict injectivity of the refined Swan conductor, so it always
// points at a reduction bug rather than a mathematical outcome.
class InternalInjectivityViolation : public Error {
public:
    explicit InternalInjectivityViolation(const std::string &what)
        : Error("internal injectivity violation: " + what)
    {
    }
};

class WildBaseChangeUnsupported : public Error {
public:
    explicit WildBaseChangeUnsupported(std::uint64_t e)
        : Error("base change with ramification index " + std::to_string(e) + " divisible by p is unsupported")
    {
    }
};

class UnsupportedCase : public Error {
public:
    explicit UnsupportedCase(const std::string &what) : Error("unsupported case: " + what) {}
};

class NonIntegralConductor : public Error {
public:
    explicit NonIntegralConductor(const std::string &what) : Error("non-integral conductor: " + what) {}
};

} // namespace swan

#endif
