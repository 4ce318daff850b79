#ifndef SWAN_PARSE_HPP
#define SWAN_PARSE_HPP

#include <string_view>

#include <swan/field.hpp>
#include <swan/series.hpp>

namespace swan {

// Text grammar shared by residue elements and series:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := primary ['^' exponent]
//   primary := integer | variable | 't' | 'O(' expr ')' | '(' expr ')'
//   exponent:= ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//
// Fractional exponents are allowed on variables of a perfected field, with a
// denominator that is a power of p. `O(t^N)` sets the precision. Division is
// only by single-term series (c * t^j). Output of to_string() parses back to
// an equal element.
LocalElement parse_series(std::string_view text, const FieldPtr &field);

// Parses with the same grammar and requires the result to be a constant series.
ResidueElement parse_residue(std::string_view text, const FieldPtr &field);

} // namespace swan

#endif
