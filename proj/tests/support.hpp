#ifndef SWAN_TESTS_SUPPORT_HPP
#define SWAN_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <swan/conductor.hpp>
#include <swan/parse.hpp>

namespace swan::testing {

inline FieldPtr field(fp::Coeff p, std::vector<std::string> vars = {"u1", "u2"})
{
    return FieldConfig::make(p, std::move(vars));
}

inline LocalElement S(const FieldPtr &k, const std::string &text)
{
    return parse_series(text, k);
}

inline ResidueElement R(const FieldPtr &k, const std::string &text)
{
    return parse_residue(text, k);
}

// Witt vector from slot strings, most negative first.
inline WittRep W(const FieldPtr &k, const std::vector<std::string> &slots)
{
    std::vector<LocalElement> xs;
    for (const auto &s : slots) {
        xs.push_back(parse_series(s, k));
    }
    return WittRep::from_slots(k, xs);
}

inline Character wild(const FieldPtr &k, const std::vector<std::string> &slots)
{
    return Character(W(k, slots));
}

} // namespace swan::testing

#endif
