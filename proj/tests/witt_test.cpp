#include <gtest/gtest.h>

#include <swan/random.hpp>

#include "support.hpp"

using namespace swan;
using namespace swan::testing;

namespace {

Polynomial mod_p(fp::Coeff p, std::size_t nvars, const std::vector<std::pair<std::vector<Polynomial::Exponent>, std::int64_t>> &terms)
{
    Polynomial f(p, nvars);
    for (const auto &[e, c] : terms) {
        f += Polynomial::monomial(p, e, fp::from_signed(c, p));
    }
    return f;
}

// Ghost identity checked by evaluating at integer points.
void check_ghost_identity(fp::Coeff p, std::size_t s)
{
    const auto w = build_structure_polynomials(p, s);
    Rng rng(p * 100 + s);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<BigInt> pt;
        for (std::size_t i = 0; i < 2 * s; ++i) {
            pt.push_back(BigInt(rng.between(-6, 6)));
        }
        std::vector<BigInt> sum, neg;
        for (std::size_t n = 0; n < s; ++n) {
            sum.push_back(w->add_polys[n].evaluate(pt));
            neg.push_back(w->neg_polys[n].evaluate(pt));
        }
        for (std::size_t n = 0; n < s; ++n) {
            BigInt gs = 0, gx = 0, gy = 0, gn = 0, pi = 1;
            for (std::size_t i = 0; i <= n; ++i) {
                const auto e = static_cast<unsigned>(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - i)));
                gs += pi * boost::multiprecision::pow(sum[i], e);
                gn += pi * boost::multiprecision::pow(neg[i], e);
                gx += pi * boost::multiprecision::pow(pt[i], e);
                gy += pi * boost::multiprecision::pow(pt[s + i], e);
                pi *= p;
            }
            EXPECT_EQ(gs, gx + gy) << "p=" << p << " s=" << s << " n=" << n;
            EXPECT_EQ(gn, -gx) << "p=" << p << " s=" << s << " n=" << n;
        }
    }
}

} // namespace

TEST(WittPolynomials, LengthOneIsAddition)
{
    const auto w = build_structure_polynomials(5, 1);
    EXPECT_EQ(w->add_mod_p[0], mod_p(5, 2, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST(WittPolynomials, CharacteristicTwo)
{
    const auto w = build_structure_polynomials(2, 2);
    // X0, X1, Y0, Y1
    EXPECT_EQ(w->add_mod_p[1], mod_p(2, 4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{1, 0, 1, 0}, 1}}));
}

TEST(WittPolynomials, CharacteristicThree)
{
    const auto w = build_structure_polynomials(3, 2);
    EXPECT_EQ(w->add_mod_p[1], mod_p(3, 4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{2, 0, 1, 0}, -1}, {{1, 0, 2, 0}, -1}}));
}

TEST(WittPolynomials, GhostIdentity)
{
    for (fp::Coeff p : {2u, 3u, 5u}) {
        for (std::size_t s = 1; s <= kMaxWittLength; ++s) {
            check_ghost_identity(p, s);
        }
    }
}

TEST(WittPolynomials, LengthBounds)
{
    EXPECT_THROW(build_structure_polynomials(2, 0), std::invalid_argument);
    EXPECT_THROW(build_structure_polynomials(2, kMaxWittLength + 1), std::invalid_argument);
}

TEST(Witt, AddZero)
{
    auto k = field(3);
    auto a = W(k, {"u1*t^-1", "u2*t^-4 + 1"});
    EXPECT_EQ(witt_add(a, WittRep(k, 2)), a);
    EXPECT_EQ(witt_add(WittRep(k, 1), a), a);
}

TEST(Witt, DoublingInCharacteristicTwo)
{
    auto k = field(2);
    // a_0 is the last Witt coordinate, so a_0 + a_0 = 2 a_0 = 0 there.
    EXPECT_TRUE(witt_add(W(k, {"0", "u1*t^-1"}), W(k, {"0", "u1*t^-1"})).is_zero());
    // A carry out of slot -1 lands in slot 0: (a, 0) + (a, 0) = (0, a^2).
    EXPECT_EQ(witt_add(W(k, {"u1*t^-1", "0"}), W(k, {"u1*t^-1", "0"})), W(k, {"0", "u1^2*t^-2"}));
}

TEST(Witt, GroupAxioms)
{
    for (fp::Coeff p : {2u, 3u, 5u}) {
        auto k = field(p);
        Rng rng(p);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t s = 1 + trial % 3;
            auto a = random_witt(rng, k, s, 6);
            auto b = random_witt(rng, k, s, 6);
            auto c = random_witt(rng, k, s, 6);
            EXPECT_EQ(witt_add(a, b), witt_add(b, a));
            EXPECT_EQ(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)));
            EXPECT_TRUE(witt_add(a, witt_neg(a)).is_zero());
            EXPECT_EQ(witt_sub(witt_add(a, b), b), a);
            EXPECT_EQ(frobenius(witt_add(a, b)), witt_add(frobenius(a), frobenius(b)));
        }
    }
}

TEST(Witt, FrobeniusVerschiebung)
{
    for (fp::Coeff p : {2u, 3u, 5u}) {
        auto k = field(p);
        Rng rng(p + 10);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t s = 1 + trial % 3;
            auto a = random_witt(rng, k, s, 5);
            const auto pa = witt_multiply(a, p);
            EXPECT_EQ(frobenius(verschiebung(a)), pa);
            EXPECT_EQ(verschiebung(frobenius(a)), pa);
        }
    }
    auto k = field(3);
    EXPECT_EQ(frobenius(W(k, {"0", "u1*t^-1"})), W(k, {"0", "u1^3*t^-3"}));
    EXPECT_EQ(verschiebung(W(k, {"u1", "u2"})), W(k, {"0", "u1"}));
}

TEST(Witt, FMinusOne)
{
    auto k = field(2);
    EXPECT_TRUE(apply_F_minus_1(WittRep(k, 2)).is_zero());
    EXPECT_EQ(apply_F_minus_1(W(k, {"u1*t^-1"})), W(k, {"u1^2*t^-2 + u1*t^-1"}));
    auto k3 = field(3);
    EXPECT_EQ(apply_F_minus_1(W(k3, {"2"})), W(k3, {"0"}));
    EXPECT_EQ(apply_F_minus_1(W(k3, {"u1"})), W(k3, {"u1^3 - u1"}));
}

TEST(Witt, PrecisionPropagates)
{
    auto k = field(2);
    auto a = W(k, {"t^-1 + O(t^2)", "t^-3"});
    auto b = W(k, {"u1*t^-1", "O(t^1)"});
    auto s = witt_add(a, b);
    // Slot 0 = X1 + Y1 + X0*Y0 carries the precision of X0*Y0.
    EXPECT_EQ(s.component(0).precision(), 1);
    EXPECT_EQ(s.component(1).precision(), 2);
}
