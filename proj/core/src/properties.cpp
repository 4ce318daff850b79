#include <swan/properties.hpp>

#include <atomic>
#include <mutex>
#include <thread>

#include <swan/errors.hpp>
#include <swan/galois_oracle.hpp>

namespace swan {

namespace {

constexpr std::size_t kMaxNotes = 5;

// Outcome of one trial: nullopt on success, otherwise a note.
struct Outcome {
    bool skipped = false;
    std::optional<std::string> failure;
    bool precision = false;
};

Outcome fail(std::string note)
{
    return {false, std::move(note), false};
}

SuiteResult run_suite(const std::string &name, std::int64_t n, unsigned jobs,
                      const std::function<Outcome(std::int64_t)> &trial)
{
    std::vector<Outcome> outcomes(static_cast<std::size_t>(n));
    parallel_for(n, jobs, [&](std::int64_t i) {
        Outcome o;
        try {
            o = trial(i);
        } catch (const PrecisionExhausted &e) {
            o = {false, std::string(e.what()), true};
        } catch (const std::exception &e) {
            o = fail(e.what());
        }
        outcomes[static_cast<std::size_t>(i)] = std::move(o);
    });
    SuiteResult r{name, 0, 0, 0, 0, {}};
    for (std::int64_t i = 0; i < n; ++i) {
        const auto &o = outcomes[static_cast<std::size_t>(i)];
        if (o.skipped) {
            ++r.skipped;
            continue;
        }
        ++r.cases;
        if (o.failure) {
            ++r.failures;
            r.precision_failures += o.precision ? 1 : 0;
            if (r.notes.size() < kMaxNotes) {
                r.notes.push_back("trial " + std::to_string(i) + ": " + *o.failure);
            }
        }
    }
    return r;
}

std::string describe(const WittRep &a)
{
    std::string s = "(";
    bool first = true;
    for (const auto &x : a.slots()) {
        s += (first ? "" : ", ") + x.to_string();
        first = false;
    }
    return s + ")";
}

CharacterOptions character_options(const SuiteConfig &cfg)
{
    CharacterOptions o;
    o.witt_length = cfg.witt_length;
    o.pole_bound = cfg.pole_bound;
    return o;
}

std::int64_t level_bound_w(std::int64_t n, fp::Coeff p)
{
    return n / static_cast<std::int64_t>(p);
}

// Cycles through lengths 1..kMaxWittLength independently of the field choice.
std::size_t trial_length(const SuiteConfig &cfg, std::int64_t trial)
{
    const auto fields = static_cast<std::int64_t>(cfg.primes.size() * cfg.var_counts.size());
    return static_cast<std::size_t>(1 + (trial / fields) % static_cast<std::int64_t>(kMaxWittLength));
}

} // namespace

void parallel_for(std::int64_t n, unsigned jobs, const std::function<void(std::int64_t)> &fn)
{
    if (jobs <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::int64_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

FieldPtr suite_field(const SuiteConfig &cfg, std::int64_t trial)
{
    const auto np = static_cast<std::int64_t>(cfg.primes.size());
    const auto nv = static_cast<std::int64_t>(cfg.var_counts.size());
    const fp::Coeff p = cfg.primes.at(static_cast<std::size_t>(trial % np));
    const std::size_t r = cfg.var_counts.at(static_cast<std::size_t>((trial / np) % nv));
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= r; ++i) {
        vars.push_back("u" + std::to_string(i));
    }
    return FieldConfig::make(p, std::move(vars));
}

Character suite_character(const SuiteConfig &cfg, std::int64_t trial)
{
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(trial));
    return random_character(rng, suite_field(cfg, trial), character_options(cfg));
}

SuiteResult witt_axioms_suite(const SuiteConfig &cfg)
{
    return run_suite("witt_axioms", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const auto k = suite_field(cfg, i);
        Rng rng = Rng::stream(cfg.seed ^ 0x57u, static_cast<std::uint64_t>(i));
        const auto s = trial_length(cfg, i);
        const auto a = random_witt(rng, k, s, 8);
        const auto b = random_witt(rng, k, s, 8);
        const auto c = random_witt(rng, k, s, 8);
        if (witt_add(a, b) != witt_add(b, a)) {
            return fail("a + b != b + a for a = " + describe(a) + ", b = " + describe(b));
        }
        if (witt_add(witt_add(a, b), c) != witt_add(a, witt_add(b, c))) {
            return fail("associativity for a = " + describe(a));
        }
        if (!witt_add(a, witt_neg(a)).is_zero()) {
            return fail("a - a != 0 for a = " + describe(a));
        }
        if (frobenius(witt_add(a, b)) != witt_add(frobenius(a), frobenius(b))) {
            return fail("F not additive for a = " + describe(a));
        }
        return {};
    });
}

SuiteResult frobenius_verschiebung_suite(const SuiteConfig &cfg)
{
    return run_suite("frobenius_verschiebung", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const auto k = suite_field(cfg, i);
        Rng rng = Rng::stream(cfg.seed ^ 0xF5u, static_cast<std::uint64_t>(i));
        const auto a = random_witt(rng, k, trial_length(cfg, i), 8);
        const auto pa = witt_multiply(a, k->p);
        if (frobenius(verschiebung(a)) != pa || verschiebung(frobenius(a)) != pa) {
            return fail("FV != p for a = " + describe(a));
        }
        return {};
    });
}

SuiteResult xi_invariance_suite(const SuiteConfig &cfg)
{
    return run_suite("xi_invariance", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const Character chi = suite_character(cfg, i);
        Rng rng = Rng::stream(cfg.seed ^ 0x1Du, static_cast<std::uint64_t>(i));
        const auto w = random_witt(rng, chi.field(), chi.wild.length(), cfg.pole_bound / 2);
        const Character moved(witt_add(chi.wild, apply_F_minus_1(w)), chi.tame_order, chi.tame_ramified);
        const auto a = conductors(chi);
        const auto b = conductors(moved);
        if (a.swan != b.swan || a.artin != b.artin || a.refined != b.refined) {
            return fail("conductors move under (F-1)w for a = " + describe(chi.wild) + ", w = " + describe(w));
        }
        return {};
    });
}

SuiteResult matsuda_suite(const SuiteConfig &cfg)
{
    std::atomic<std::int64_t> nontrivial{0};
    auto r = run_suite("matsuda_factorization", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const auto k = suite_field(cfg, i);
        Rng rng = Rng::stream(cfg.seed ^ 0x3Au, static_cast<std::uint64_t>(i));
        const auto len = static_cast<std::size_t>(1 + i % static_cast<std::int64_t>(cfg.witt_length));
        const auto a = random_witt(rng, k, len, cfg.pole_bound);
        const std::int64_t n = cw_level(a);
        const std::int64_t bound = level_bound_w(n, k->p);
        const auto w = random_witt(rng, k, len, bound);
        const auto diff = phi(witt_add(a, apply_F_minus_1(w))) - phi(a);
        if (!(diff == DifferentialForm::zero(k))) {
            ++nontrivial;
        }
        const auto lv = omega_levels(diff);
        if (lv.log_level > bound) {
            return fail("log level " + std::to_string(lv.log_level) + " > " + std::to_string(bound) + " for a = "
                        + describe(a) + ", w = " + describe(w));
        }
        return {};
    });
    r.notes.push_back("phi changed in " + std::to_string(nontrivial.load()) + " instances");
    return r;
}

SuiteResult interleaving_suite(const SuiteConfig &cfg)
{
    return run_suite("filtration_interleaving", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const auto k = suite_field(cfg, i);
        Rng rng = Rng::stream(cfg.seed ^ 0x11u, static_cast<std::uint64_t>(i));
        const auto lv = omega_levels(random_form(rng, k, cfg.pole_bound));
        if (lv.log_level > lv.nonlog_level || lv.nonlog_level > lv.log_level + 1) {
            return fail("levels " + std::to_string(lv.log_level) + ", " + std::to_string(lv.nonlog_level));
        }
        return {};
    });
}

SuiteResult artin_swan_divisibility_suite(const SuiteConfig &cfg)
{
    return run_suite("artin_equals_swan_divisible_by_p", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const Character chi = suite_character(cfg, i);
        const auto c = conductors(chi);
        const auto p = static_cast<std::int64_t>(chi.field()->p);
        if (c.swan >= 1 && c.artin != c.swan && c.artin != c.swan + 1) {
            return fail("artin " + std::to_string(c.artin) + " with swan " + std::to_string(c.swan));
        }
        if (c.swan != 0 && c.artin == c.swan && c.swan % p != 0) {
            return fail("artin = swan = " + std::to_string(c.swan) + " not divisible by p for " + describe(chi.wild));
        }
        return {};
    });
}

SuiteResult swan_scaling_suite(const SuiteConfig &cfg)
{
    return run_suite("swan_scaling", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        SuiteConfig small = cfg;
        small.pole_bound = std::min<std::int64_t>(cfg.pole_bound, 8);
        const Character chi = suite_character(small, i);
        const std::int64_t n = swan(chi);
        for (std::uint64_t e = 1; e <= 7; ++e) {
            if (e % chi.field()->p == 0) {
                continue;
            }
            const std::int64_t ne = swan(tame_base_change(chi, e));
            if (ne != static_cast<std::int64_t>(e) * n) {
                return fail("swan " + std::to_string(ne) + " after t -> t^" + std::to_string(e) + ", expected "
                            + std::to_string(static_cast<std::int64_t>(e) * n));
            }
        }
        return {};
    });
}

SuiteResult main_theorem_suite(const SuiteConfig &cfg, std::vector<std::optional<TheoremReport>> *reports)
{
    std::vector<std::optional<TheoremReport>> local(static_cast<std::size_t>(std::max<std::int64_t>(cfg.trials, 0)));
    auto r = run_suite("main_theorem", cfg.trials, cfg.jobs, [&](std::int64_t i) -> Outcome {
        const Character chi = suite_character(cfg, i);
        const TheoremReport rep = verify_theorem(chi);
        local[static_cast<std::size_t>(i)] = rep;
        if (!rep.holds) {
            return fail("artin " + std::to_string(rep.artin_base) + " over K but " + std::to_string(rep.artin_g)
                        + " over K^g for " + describe(chi.wild));
        }
        if (!rep.relations_hold) {
            return fail("swan_g = " + std::to_string(rep.swan_g) + " with artin = " + std::to_string(rep.artin_base));
        }
        return {};
    });
    if (reports) {
        *reports = std::move(local);
    }
    return r;
}

SuiteResult oracle_suite(const SuiteConfig &cfg)
{
    struct Job {
        fp::Coeff p;
        std::int64_t m;
    };
    std::vector<Job> jobs;
    for (auto p : cfg.primes) {
        for (std::int64_t m = 1; m <= cfg.pole_bound; ++m) {
            jobs.push_back({p, m});
        }
    }
    return run_suite("oracle", static_cast<std::int64_t>(jobs.size()), cfg.jobs, [&](std::int64_t i) -> Outcome {
        const auto [p, m] = jobs[static_cast<std::size_t>(i)];
        if (m % static_cast<std::int64_t>(p) == 0) {
            return {true, std::nullopt, false};
        }
        auto vars = suite_field(cfg, i)->basis_vars;
        const auto k = FieldConfig::make(p, vars);
        Rng rng = Rng::stream(cfg.seed ^ 0x0Cu, static_cast<std::uint64_t>(i));
        // Leading coefficient a unit of k, lower terms arbitrary.
        const auto a = random_series(rng, k, m);
        const auto bc = analyse_extension(a);
        if (bc.break_index != m || bc.v_t != static_cast<std::int64_t>(p) || bc.v_pi != 1) {
            return fail("break " + std::to_string(bc.break_index) + " for m = " + std::to_string(m));
        }
        const auto rep = oracle_check(Character(WittRep::from_slots(k, {a})));
        if (!rep.agree || rep.artin_formula != m + 1 || rep.swan_formula != m) {
            return fail("formula (" + std::to_string(rep.artin_formula) + ", " + std::to_string(rep.swan_formula)
                        + ") vs conductor (" + std::to_string(rep.artin_conductor) + ", "
                        + std::to_string(rep.swan_conductor) + ") at p = " + std::to_string(p) + ", m = "
                        + std::to_string(m));
        }
        return {};
    });
}

std::vector<SuiteResult> selftest(const SuiteConfig &cfg)
{
    return {witt_axioms_suite(cfg),   frobenius_verschiebung_suite(cfg), xi_invariance_suite(cfg),
            matsuda_suite(cfg),       interleaving_suite(cfg),           artin_swan_divisibility_suite(cfg),
            swan_scaling_suite(cfg),  main_theorem_suite(cfg),           oracle_suite(cfg)};
}

} // namespace swan
