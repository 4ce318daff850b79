#include <gtest/gtest.h>

#include <swan/errors.hpp>

#include "support.hpp"

using namespace swan;
using namespace swan::testing;

namespace {

Polynomial poly(const FieldPtr &k, const std::string &text)
{
    return parse_residue(text, k).numerator();
}

} // namespace

TEST(Polynomial, GcdCancelsCommonFactor)
{
    auto k = field(3);
    auto r = rf_normalize(k, poly(k, "u1^2 - 1"), poly(k, "u1 - 1"));
    EXPECT_EQ(r, R(k, "u1 + 1"));
    EXPECT_TRUE(r.denominator().is_one());
}

TEST(Polynomial, GcdMultivariate)
{
    auto k = field(5);
    auto r = rf_normalize(k, poly(k, "u1*u2 + u1"), poly(k, "u2 + 1"));
    EXPECT_EQ(r, R(k, "u1"));
    // Oracle: multiply back.
    EXPECT_EQ(r * R(k, "u2 + 1"), R(k, "u1*u2 + u1"));
    const auto g = gcd(poly(k, "(u1 + u2)^3*(u1 - 2)"), poly(k, "(u1 + u2)^2*(u2 + 1)"));
    EXPECT_EQ(g, poly(k, "(u1 + u2)^2"));
}

TEST(Polynomial, ZeroNumeratorAndDenominator)
{
    auto k = field(2);
    EXPECT_TRUE(rf_normalize(k, poly(k, "0"), poly(k, "u1")).is_zero());
    EXPECT_THROW(rf_normalize(k, poly(k, "u1"), poly(k, "0")), ZeroDenominator);
}

TEST(Residue, DenominatorNormalized)
{
    auto k = field(5);
    auto r = R(k, "u1 / (2*u2 + 3)");
    EXPECT_EQ(r.denominator().leading_coeff(), 1u);
    EXPECT_EQ(r, R(k, "3*u1 / (u2 + 4)"));
}

TEST(Residue, CrossMultiplication)
{
    auto k = field(7);
    EXPECT_EQ(R(k, "u1/u2") + R(k, "u2/u1"), R(k, "(u1^2 + u2^2)/(u1*u2)"));
    auto a = R(k, "(u1 + 3)/(u2^2 + u1)");
    EXPECT_EQ(a * a.inverse(), R(k, "1"));
    EXPECT_EQ(a + R(k, "0"), a);
    EXPECT_THROW(a / R(k, "0"), DivisionByZero);
}

TEST(Residue, PthPowers)
{
    auto k = field(2);
    EXPECT_TRUE(R(k, "u1^2").is_pth_power());
    EXPECT_FALSE(R(k, "u1").is_pth_power());
    auto f = R(k, "(u1^2 + u2^2)/u2^4");
    ASSERT_TRUE(f.is_pth_power());
    EXPECT_EQ(f.pth_root(), R(k, "(u1 + u2)/u2^2"));
    EXPECT_EQ(f.pth_root().pow(2), f);
    EXPECT_EQ(R(k, "u1^2*u2^4").pth_root(), R(k, "u1*u2^2"));
    EXPECT_EQ(R(k, "1").pth_root(), R(k, "1"));
    EXPECT_THROW(R(k, "u1").pth_root(), NotAPthPower);
}

TEST(Residue, PerfectedRoots)
{
    auto kg = FieldConfig::make(3, {}, {"u1_0", "u1_1"}, true);
    auto x = R(kg, "u1_1");
    EXPECT_TRUE(x.is_pth_power());
    auto r = x.pth_root();
    EXPECT_EQ(r.scale(), 1u);
    EXPECT_EQ(r.pow(3), x);
    EXPECT_EQ(r, R(kg, "u1_1^(1/3)"));
    EXPECT_EQ(r.frobenius(), x);
    // Mixed scales add correctly and the scale stays minimal.
    auto s = r + R(kg, "u1_0");
    EXPECT_EQ(s.scale(), 1u);
    EXPECT_EQ((s - r).scale(), 0u);
}

TEST(Residue, PartialDerivatives)
{
    auto k = field(2);
    EXPECT_TRUE(R(k, "u1^2").partial_derivative("u1").is_zero());
    EXPECT_EQ(R(k, "u1*u2").partial_derivative("u1"), R(k, "u2"));
    auto k5 = field(5);
    // Quotient rule oracle: d(1/u1) * u1^2 = -1.
    EXPECT_EQ(R(k5, "1/u1").partial_derivative("u1") * R(k5, "u1^2"), R(k5, "-1"));
    EXPECT_THROW(R(k, "u1").partial_derivative("u9"), UnknownVariable);
}

TEST(Residue, PrintParseRoundTrip)
{
    auto k = field(5);
    for (const char *s : {"0", "1", "u1", "3*u1^2*u2 + 1", "(u1 + 2)/(u2^3 + u1)", "u1/(u1*u2 + 1)",
                          "4/u2"}) {
        auto r = R(k, s);
        EXPECT_EQ(R(k, r.to_string()), r) << s << " -> " << r.to_string();
    }
    auto kg = FieldConfig::make(3, {}, {"a", "b"}, true);
    auto r = R(kg, "a^(1/9) + b^(2/3)");
    EXPECT_EQ(R(kg, r.to_string()), r) << r.to_string();
}

TEST(Series, Valuation)
{
    auto k = field(3);
    EXPECT_EQ(*S(k, "t^-3 + t^-1").valuation(), -3);
    EXPECT_FALSE(S(k, "O(t^4)").valuation().has_value());
    EXPECT_EQ(S(k, "O(t^4)").valuation_bound(), 4);
}

TEST(Series, InverseOfUnit)
{
    auto k = field(3);
    auto f = S(k, "1 + t");
    auto g = f.inverse(10);
    auto one = f * g;
    EXPECT_EQ(one.terms().size(), 1u);
    EXPECT_TRUE(one.coefficient(0).is_one());
    EXPECT_EQ(one.precision(), 10);
}

TEST(Series, InverseOfPolarSeries)
{
    auto k = field(5);
    auto f = S(k, "u1*t^-2*(1 + t)");
    auto g = f.inverse(8);
    EXPECT_EQ(*g.valuation(), 2);
    EXPECT_EQ(g.coefficient(2), R(k, "1/u1"));
    EXPECT_EQ(g.coefficient(3), R(k, "-1/u1"));
    EXPECT_EQ(g.coefficient(4), R(k, "1/u1"));
    auto back = f * g;
    EXPECT_TRUE(back.coefficient(0).is_one());
    for (std::int64_t j = 1; j < back.precision(); ++j) {
        EXPECT_TRUE(back.coefficient(j).is_zero());
    }
    EXPECT_THROW(S(k, "0").inverse(), ZeroInverse);
    EXPECT_THROW(S(k, "O(t^3)").inverse(), PrecisionExhausted);
}

TEST(Series, PrecisionPropagation)
{
    auto k = field(2);
    auto f = S(k, "t^-2 + O(t^3)");
    auto g = S(k, "t + O(t^4)");
    // min(-2 + 4, 1 + 3)
    EXPECT_EQ((f * g).precision(), 2);
    EXPECT_EQ((f + g).precision(), 3);
    EXPECT_EQ(f.frobenius().precision(), 6);
    EXPECT_THROW(f.coefficient(5), PrecisionExhausted);
}

TEST(Series, PrintParseRoundTrip)
{
    auto k = field(3);
    for (const char *s : {"u1*t^-2 + (u1 + u2)*t^-1 + O(t^5)", "0", "O(t^-2)", "t^7", "2*t^-1 + u1/u2 + u2*t",
                          "(u1 + 1)/(u2 + 1)*t^3 + O(t^4)"}) {
        auto x = S(k, s);
        EXPECT_EQ(S(k, x.to_string()), x) << s << " -> " << x.to_string();
    }
}

TEST(Series, ParseErrors)
{
    auto k = field(3);
    EXPECT_THROW(S(k, "u1 +"), ParseError);
    EXPECT_THROW(S(k, "u3"), ParseError);
    EXPECT_THROW(S(k, "(1 + t)^-1"), ParseError);
    EXPECT_THROW(S(k, "u1^(1/3)"), ParseError);
    EXPECT_THROW(S(k, "O(u1)"), ParseError);
}

TEST(Substitute, ResidueBinding)
{
    auto k = field(2, {"u1"});
    auto kg = field(2, {"u1", "u1_1"});
    Bindings b;
    b.residue.emplace("u1", S(kg, "u1 + u1_1*t"));
    EXPECT_EQ(substitute(S(k, "u1*t^-1"), b, kg), S(kg, "u1*t^-1 + u1_1"));
    EXPECT_EQ(substitute(S(k, "u1^2*t^-2"), b, kg), S(kg, "u1^2*t^-2 + u1_1^2"));
}

TEST(Substitute, TBinding)
{
    auto k = field(3);
    Bindings b;
    b.t = S(k, "t^2");
    EXPECT_EQ(substitute(S(k, "t^-3 + 1"), b, k), S(k, "t^-6 + 1"));
    EXPECT_EQ(substitute(S(k, "t^-1 + O(t^2)"), b, k).precision(), 4);
}

TEST(Substitute, InvalidBindings)
{
    auto k = field(3);
    Bindings b;
    b.t = S(k, "1 + t");
    EXPECT_THROW(substitute(S(k, "t"), b, k), InvalidBindingValuation);
    Bindings c;
    c.residue.emplace("u1", S(k, "t^-1"));
    EXPECT_THROW(substitute(S(k, "u1"), c, k), InvalidBindingValuation);
}

TEST(Substitute, RationalCoefficientsUseSeriesInverse)
{
    auto k = field(3, {"u1"});
    auto kg = FieldConfig::make(3, {}, {"u1_0", "u1_1"}, true);
    Bindings b;
    b.residue.emplace("u1", S(kg, "u1_0 + u1_1*t + O(t^2)"));
    auto img = substitute(S(k, "1/u1"), b, kg);
    auto back = img * substitute(S(k, "u1"), b, kg);
    EXPECT_TRUE(back.coefficient(0).is_one());
    EXPECT_TRUE(back.coefficient(1).is_zero());
    EXPECT_EQ(img.precision(), 2);
}
