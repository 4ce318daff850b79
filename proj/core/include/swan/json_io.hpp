#ifndef SWAN_JSON_IO_HPP
#define SWAN_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <swan/conductor.hpp>
#include <swan/galois_oracle.hpp>
#include <swan/perfection.hpp>

namespace swan {

// Insertion-ordered so that reports serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"p":2, "vars":["u1"], "witt":["u1*t^-2", "0"], "tame_order":1,
//  "tame_ramified":false, "prec":8}
// Witt slots are listed most negative first. "prec" (or the fallback) is the
// t-adic precision given to slots written without an O(t^N) term; without
// either the slots are exact. Throws ParseError on malformed input.
Character character_from_json(const Json &j, std::optional<std::int64_t> fallback_prec = std::nullopt);
Json character_to_json(const Character &chi);

Json to_json(const RefinedSwan &r);
// {"swan":n, "artin":m, "refined_swan":{...} or null}
Json to_json(const ConductorReport &r);
// {"swan":..,"artin":..,"swan_g":..,"artin_g":..,"holds":..,"depth":..}
Json to_json(const TheoremReport &r);
// {"break":..,"artin_formula":..,"artin_conductor":..,"agree":..}
Json to_json(const OracleReport &r);

} // namespace swan

#endif
