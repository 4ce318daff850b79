#include <gtest/gtest.h>

#include <swan/errors.hpp>
#include <swan/json_io.hpp>

#include "support.hpp"

using namespace swan;
using namespace swan::testing;

TEST(CharacterJson, ParsesSlotsMostNegativeFirst)
{
    auto chi = character_from_json(Json::parse(R"j({"p":3,"vars":["u1"],"witt":["t^-1","u1*t^-2"]})j"));
    auto k = chi.field();
    EXPECT_EQ(chi.wild, W(k, {"t^-1", "u1*t^-2"}));
    EXPECT_EQ(chi.tame_order, 1u);
    EXPECT_FALSE(chi.tame_ramified);
}

TEST(CharacterJson, SingleStringIsLengthOne)
{
    auto chi = character_from_json(Json::parse(R"j({"p":2,"witt":"t^-3"})j"));
    EXPECT_EQ(chi.wild.length(), 1u);
    EXPECT_EQ(swan::swan(chi), 3);
}

TEST(CharacterJson, PrecTruncatesExactSlotsOnly)
{
    auto chi = character_from_json(Json::parse(R"j({"p":2,"witt":["t^-3 + t^4","t^-1 + O(t^9)"],"prec":2})j"));
    auto k = chi.field();
    EXPECT_EQ(chi.wild.slots()[0], S(k, "t^-3 + O(t^2)"));
    EXPECT_EQ(chi.wild.slots()[1], S(k, "t^-1 + O(t^9)"));
}

TEST(CharacterJson, FallbackPrecUsedWhenAbsent)
{
    auto chi = character_from_json(Json::parse(R"j({"p":2,"witt":"t^-3 + t^4"})j"), 1);
    EXPECT_EQ(chi.wild.slots()[0], S(chi.field(), "t^-3 + O(t^1)"));
}

TEST(CharacterJson, TameFields)
{
    auto chi = character_from_json(Json::parse(R"j({"p":5,"witt":"0","tame_order":4,"tame_ramified":true})j"));
    EXPECT_EQ(chi.tame_order, 4u);
    EXPECT_TRUE(chi.tame_ramified);
    EXPECT_EQ(artin(chi), 1);
}

TEST(CharacterJson, RoundTrip)
{
    auto k = field(3);
    Character chi(W(k, {"u1*t^-2 + 1", "u2^2*t^-5 + O(t^3)"}), 2, true);
    auto back = character_from_json(character_to_json(chi));
    EXPECT_EQ(back.wild, chi.wild);
    EXPECT_EQ(back.tame_order, 2u);
    EXPECT_TRUE(back.tame_ramified);
}

TEST(CharacterJson, Errors)
{
    for (const char *text : {R"j([1])j", R"j({"witt":"t^-1"})j", R"j({"p":2})j", R"j({"p":4,"witt":"t^-1"})j",
                             R"j({"p":1,"witt":"t^-1"})j", R"j({"p":2,"witt":[]})j",
                             R"j({"p":2,"witt":["0","0","0","0"]})j", R"j({"p":2,"witt":"t^-1 +"})j",
                             R"j({"p":2,"witt":"t^-1","tame_order":2})j", R"j({"p":3,"witt":"t^-1","tame_order":0})j",
                             R"j({"p":3,"witt":"t^-1","tame_order":"x"})j", R"j({"p":3,"witt":"v*t^-1"})j",
                             R"j({"p":3,"witt":"t^-1","tame_order":1,"tame_ramified":true})j"}) {
        EXPECT_THROW(character_from_json(Json::parse(text)), ParseError) << text;
    }
}

TEST(ReportJson, ConductorKeysAndOrder)
{
    auto k = field(2, {"u1"});
    auto j = to_json(conductors(wild(k, {"u1*t^-2"})));
    EXPECT_EQ(j.dump(), R"j({"swan":2,"artin":2,"refined_swan":{"level":2,"residue":"0","omega":{"u1":"1"}}})j");
    auto tame = to_json(conductors(Character(WittRep(k, 1), 3, true)));
    EXPECT_TRUE(tame["refined_swan"].is_null());
    EXPECT_EQ(tame["artin"], 1);
}
