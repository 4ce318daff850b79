#include <swan/json_io.hpp>

#include <swan/errors.hpp>
#include <swan/parse.hpp>

namespace swan {

namespace {

template <class T>
T field_or(const Json &j, const char *key, T fallback)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field '") + key + "': " + e.what(), 0);
    }
}

} // namespace

Character character_from_json(const Json &j, std::optional<std::int64_t> fallback_prec)
{
    if (!j.is_object()) {
        throw ParseError("character must be a JSON object", 0);
    }
    if (!j.contains("p") || !j.contains("witt")) {
        throw ParseError("character needs \"p\" and \"witt\"", 0);
    }
    const auto p = field_or<std::int64_t>(j, "p", 0);
    if (p < 2 || p > (1 << 20)) {
        throw ParseError("p out of range", 0);
    }
    const auto vars = field_or<std::vector<std::string>>(j, "vars", {});
    FieldPtr field;
    try {
        field = FieldConfig::make(static_cast<fp::Coeff>(p), vars);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0);
    }
    std::vector<std::string> slots;
    if (j.at("witt").is_string()) {
        slots.push_back(j.at("witt").get<std::string>());
    } else {
        slots = field_or<std::vector<std::string>>(j, "witt", {});
    }
    if (slots.empty() || slots.size() > kMaxWittLength) {
        throw ParseError("\"witt\" must list between 1 and " + std::to_string(kMaxWittLength) + " slots", 0);
    }
    const auto prec = j.contains("prec") && !j.at("prec").is_null()
                          ? std::optional<std::int64_t>(field_or<std::int64_t>(j, "prec", 0))
                          : fallback_prec;
    std::vector<LocalElement> xs;
    for (const auto &s : slots) {
        LocalElement x = parse_series(s, field);
        if (prec && x.is_exact()) {
            x = x.truncated(*prec);
        }
        xs.push_back(std::move(x));
    }
    const auto order = field_or<std::int64_t>(j, "tame_order", 1);
    const bool ramified = field_or<bool>(j, "tame_ramified", false);
    if (order < 1) {
        throw ParseError("tame_order must be positive", 0);
    }
    try {
        return Character(WittRep::from_slots(field, xs), static_cast<std::uint64_t>(order), ramified);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0);
    }
}

Json character_to_json(const Character &chi)
{
    const auto &k = *chi.field();
    Json j;
    j["p"] = k.p;
    j["vars"] = k.basis_vars;
    if (k.perfected) {
        j["perfection_vars"] = k.perfection_vars;
    }
    Json slots = Json::array();
    for (const auto &x : chi.wild.slots()) {
        slots.push_back(x.to_string());
    }
    j["witt"] = std::move(slots);
    j["tame_order"] = chi.tame_order;
    j["tame_ramified"] = chi.tame_ramified;
    return j;
}

Json to_json(const RefinedSwan &r)
{
    Json j;
    j["level"] = r.level;
    j["residue"] = r.residue_part.to_string();
    Json omega = Json::object();
    for (const auto &[v, c] : r.omega_part) {
        omega[v] = c.to_string();
    }
    j["omega"] = std::move(omega);
    return j;
}

Json to_json(const ConductorReport &r)
{
    Json j;
    j["swan"] = r.swan;
    j["artin"] = r.artin;
    j["refined_swan"] = r.refined ? to_json(*r.refined) : Json(nullptr);
    return j;
}

Json to_json(const TheoremReport &r)
{
    Json j;
    j["swan"] = r.swan_base;
    j["artin"] = r.artin_base;
    j["swan_g"] = r.swan_g;
    j["artin_g"] = r.artin_g;
    j["holds"] = r.holds;
    j["relations_hold"] = r.relations_hold;
    j["depth"] = r.depth;
    return j;
}

Json to_json(const OracleReport &r)
{
    Json j;
    j["m"] = r.m;
    j["break"] = r.break_index;
    j["artin_formula"] = r.artin_formula;
    j["artin_conductor"] = r.artin_conductor;
    j["swan_formula"] = r.swan_formula;
    j["swan_conductor"] = r.swan_conductor;
    j["agree"] = r.agree;
    return j;
}

} // namespace swan
