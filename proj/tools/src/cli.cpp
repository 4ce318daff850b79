#include <swan/cli.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <swan/errors.hpp>
#include <swan/json_io.hpp>
#include <swan/properties.hpp>

namespace swan::cli {

namespace {

struct RunConfig {
    std::string command;
    unsigned p = 2;
    std::string vars = "u1";
    std::optional<std::int64_t> prec;
    std::optional<std::size_t> depth;
    std::int64_t trials = 50;
    std::uint64_t seed = 1;
    std::int64_t pole_bound = 20;
    std::size_t witt_length = 2;
    std::string json;
    unsigned jobs = 1;
    bool p_given = false;
};

// Thrown for bad flags or input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_vars(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
            }
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    return out;
}

Json read_json(const std::string &spec, std::istream &in)
{
    std::string text;
    if (spec == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
        text = spec;
    } else {
        std::ifstream f(spec);
        if (!f) {
            throw UsageError("cannot open " + spec);
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

Character input_character(const RunConfig &cfg, std::istream &in)
{
    if (cfg.json.empty()) {
        throw UsageError(cfg.command + " needs --json <file|-|inline>");
    }
    return character_from_json(read_json(cfg.json, in), cfg.prec);
}

FieldPtr flag_field(const RunConfig &cfg)
{
    try {
        return FieldConfig::make(cfg.p, split_vars(cfg.vars));
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

void check_batch(const RunConfig &cfg)
{
    if (cfg.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    if (cfg.witt_length < 1 || cfg.witt_length > kMaxWittLength) {
        throw UsageError("--witt-length must be between 1 and " + std::to_string(kMaxWittLength));
    }
    if (cfg.pole_bound < 0) {
        throw UsageError("--pole-bound must be non-negative");
    }
}

int cmd_conductor(const RunConfig &cfg, std::istream &in, Json &out)
{
    out = to_json(conductors(input_character(cfg, in)));
    return kOk;
}

int cmd_pullback(const RunConfig &cfg, std::istream &in, Json &out)
{
    const Character chi = input_character(cfg, in);
    const ConductorReport base = conductors(chi);
    const std::size_t depth = cfg.depth.value_or(static_cast<std::size_t>(base.swan) + 1);
    const auto map = build_perfection_map(chi.field(), depth);
    const Character pulled = pullback(chi, map);
    out["depth"] = depth;
    out["character"] = character_to_json(pulled);
    out["conductors"] = to_json(conductors_over_perfection(pulled));
    return kOk;
}

int cmd_verify(const RunConfig &cfg, std::istream &in, Json &out)
{
    if (!cfg.json.empty()) {
        const auto rep = verify_theorem(input_character(cfg, in), cfg.depth);
        out = to_json(rep);
        return rep.holds && rep.relations_hold ? kOk : kDisagreement;
    }
    check_batch(cfg);
    const FieldPtr field = flag_field(cfg);
    CharacterOptions opts;
    opts.witt_length = cfg.witt_length;
    opts.pole_bound = cfg.pole_bound;
    if (cfg.pole_bound == 0) {
        opts.require_ramified = false;
    }
    struct Row {
        Json json;
        bool failed = false;
        bool precision = false;
    };
    std::vector<Row> rows(static_cast<std::size_t>(cfg.trials));
    parallel_for(cfg.trials, cfg.jobs, [&](std::int64_t i) {
        Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(i));
        const Character chi = random_character(rng, field, opts);
        Row row;
        row.json["trial"] = i;
        row.json["character"] = character_to_json(chi);
        try {
            const Json rep_json = to_json(verify_theorem(chi, cfg.depth));
            for (const auto &[k, v] : rep_json.items()) {
                row.json[k] = v;
            }
            row.failed = !(rep_json.at("holds").get<bool>() && rep_json.at("relations_hold").get<bool>());
        } catch (const PrecisionExhausted &e) {
            row.json["error"] = e.what();
            row.precision = true;
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    });
    Json cases = Json::array();
    std::int64_t failures = 0;
    std::int64_t precision = 0;
    for (auto &row : rows) {
        failures += row.failed ? 1 : 0;
        precision += row.precision ? 1 : 0;
        cases.push_back(std::move(row.json));
    }
    out["p"] = cfg.p;
    out["vars"] = field->basis_vars;
    out["seed"] = cfg.seed;
    out["cases"] = std::move(cases);
    out["trials"] = cfg.trials;
    out["failures"] = failures;
    out["precision_failures"] = precision;
    if (failures > 0) {
        return kDisagreement;
    }
    return precision > 0 ? kPrecision : kOk;
}

int cmd_oracle(const RunConfig &cfg, std::istream &in, Json &out)
{
    if (!cfg.json.empty()) {
        try {
            const auto rep = oracle_check(input_character(cfg, in));
            out = to_json(rep);
            return rep.agree ? kOk : kDisagreement;
        } catch (const UnsupportedCase &e) {
            out["skipped"] = true;
            out["reason"] = e.what();
            return kOk;
        }
    }
    if (cfg.pole_bound < 1) {
        throw UsageError("--pole-bound must be at least 1 for an oracle sweep");
    }
    const FieldPtr field = flag_field(cfg);
    Json cases = Json::array();
    std::int64_t failures = 0;
    std::int64_t skipped = 0;
    for (std::int64_t m = 1; m <= cfg.pole_bound; ++m) {
        Json row;
        row["m"] = m;
        if (m % static_cast<std::int64_t>(cfg.p) == 0) {
            row["skipped"] = "pole order divisible by p";
            ++skipped;
            cases.push_back(std::move(row));
            continue;
        }
        Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(m));
        const LocalElement a = random_series(rng, field, m);
        row["a"] = a.to_string();
        try {
            const auto rep = oracle_check(Character(WittRep::from_slots(field, {a})));
            const Json rep_json = to_json(rep);
            for (const auto &[k, v] : rep_json.items()) {
                row[k] = v;
            }
            failures += rep.agree && rep.break_index == m ? 0 : 1;
        } catch (const UnsupportedCase &e) {
            row["skipped"] = e.what();
            ++skipped;
        }
        cases.push_back(std::move(row));
    }
    out["p"] = cfg.p;
    out["cases"] = std::move(cases);
    out["skipped"] = skipped;
    out["failures"] = failures;
    return failures == 0 ? kOk : kDisagreement;
}

int cmd_selftest(const RunConfig &cfg, Json &out)
{
    check_batch(cfg);
    SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.trials = cfg.trials;
    sc.pole_bound = cfg.pole_bound;
    sc.witt_length = cfg.witt_length;
    sc.jobs = cfg.jobs;
    if (cfg.p_given) {
        sc.primes = {cfg.p};
    }
    Json suites = Json::array();
    std::int64_t failures = 0;
    std::int64_t precision = 0;
    for (const auto &r : selftest(sc)) {
        Json s;
        s["name"] = r.name;
        s["cases"] = r.cases;
        s["failures"] = r.failures;
        s["skipped"] = r.skipped;
        s["passed"] = r.passed();
        if (!r.notes.empty()) {
            s["notes"] = r.notes;
        }
        failures += r.failures - r.precision_failures;
        precision += r.precision_failures;
        suites.push_back(std::move(s));
    }
    out["seed"] = cfg.seed;
    out["suites"] = std::move(suites);
    out["failures"] = failures + precision;
    if (failures > 0) {
        return kDisagreement;
    }
    return precision > 0 ? kPrecision : kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in)
{
    RunConfig cfg;
    CLI::App app{"Swan and Artin conductors of rank-one characters of k((t))", "swancond"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    auto *p_opt = app.add_option("--p", cfg.p, "residue characteristic (prime)");
    app.add_option("--vars", cfg.vars, "comma-separated p-basis variables for random characters");
    app.add_option("--prec", cfg.prec, "t-adic precision for input slots without an O(t^N) term");
    app.add_option("--depth", cfg.depth, "perfection depth J (default swan + 1)");
    app.add_option("--trials", cfg.trials, "number of random trials");
    app.add_option("--seed", cfg.seed, "64-bit seed");
    app.add_option("--pole-bound", cfg.pole_bound, "bound on the Swan level of random characters");
    app.add_option("--witt-length", cfg.witt_length, "maximal Witt length of random characters");
    app.add_option("--json", cfg.json, "character JSON: a file, '-' for stdin, or inline text");
    app.add_option("--jobs", cfg.jobs, "worker threads for batches");
    const std::pair<const char *, const char *> commands[] = {
        {"conductor", "Swan, Artin and refined Swan conductor of --json"},
        {"pullback", "pull --json back to the residually perfect extension and report its conductors"},
        {"verify", "compare conductors before and after pullback for --json or random characters"},
        {"oracle", "check conductors against the ramification break of an Artin-Schreier extension"},
        {"selftest", "run all randomized property suites"},
    };
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help)->callback([&cfg, name = name] { cfg.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "swancond: " << e.what() << "\n";
        return kUsage;
    }
    cfg.p_given = p_opt->count() > 0;
    if (!fp::is_prime(cfg.p)) {
        err << "swancond: --p must be prime\n";
        return kUsage;
    }
    if (cfg.jobs == 0) {
        cfg.jobs = 1;
    }

    Json report;
    int code = kOk;
    try {
        if (cfg.command == "conductor") {
            code = cmd_conductor(cfg, in, report);
        } else if (cfg.command == "pullback") {
            code = cmd_pullback(cfg, in, report);
        } else if (cfg.command == "verify") {
            code = cmd_verify(cfg, in, report);
        } else if (cfg.command == "oracle") {
            code = cmd_oracle(cfg, in, report);
        } else {
            code = cmd_selftest(cfg, report);
        }
    } catch (const UsageError &e) {
        err << "swancond: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError &e) {
        err << "swancond: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionExhausted &e) {
        err << "swancond: " << e.what() << "; about " << e.deficit()
            << " more terms of t-adic precision are needed (raise --prec or --depth)\n";
        return kPrecision;
    } catch (const UnsupportedCase &e) {
        err << "swancond: " << e.what() << "\n";
        return kUsage;
    } catch (const WildBaseChangeUnsupported &e) {
        err << "swancond: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "swancond: " << e.what() << "\n";
        return kDisagreement;
    }
    out << report.dump(2) << "\n";
    return code;
}

} // namespace swan::cli
