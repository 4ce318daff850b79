#ifndef SWAN_PROPERTIES_HPP
#define SWAN_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <swan/perfection.hpp>
#include <swan/random.hpp>

namespace swan {

// Randomized invariant suites. Trial i draws from Rng::stream(seed, i) and
// runs over the field with p = primes[i % #primes] and
// r = var_counts[(i / #primes) % #var_counts] variables u1..ur, so results do
// not depend on the number of worker threads.
struct SuiteConfig {
    std::uint64_t seed = 1;
    std::int64_t trials = 50;
    std::vector<fp::Coeff> primes{2, 3, 5};
    std::vector<std::size_t> var_counts{1, 2};
    std::size_t witt_length = 2;
    std::int64_t pole_bound = 20;
    unsigned jobs = 1;
};

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::int64_t skipped = 0;
    // Trials that ran out of precision; also counted as failures.
    std::int64_t precision_failures = 0;
    std::vector<std::string> notes;

    bool passed() const
    {
        return failures == 0 && cases > 0;
    }
};

FieldPtr suite_field(const SuiteConfig &cfg, std::int64_t trial);
Character suite_character(const SuiteConfig &cfg, std::int64_t trial);

// Runs fn(0..n-1) on cfg.jobs threads.
void parallel_for(std::int64_t n, unsigned jobs, const std::function<void(std::int64_t)> &fn);

SuiteResult witt_axioms_suite(const SuiteConfig &cfg);
SuiteResult frobenius_verschiebung_suite(const SuiteConfig &cfg);
SuiteResult xi_invariance_suite(const SuiteConfig &cfg);
SuiteResult matsuda_suite(const SuiteConfig &cfg);
SuiteResult interleaving_suite(const SuiteConfig &cfg);
SuiteResult artin_swan_divisibility_suite(const SuiteConfig &cfg);
SuiteResult swan_scaling_suite(const SuiteConfig &cfg);
// Main theorem on the suite characters; optionally returns each report.
SuiteResult main_theorem_suite(const SuiteConfig &cfg, std::vector<std::optional<TheoremReport>> *reports = nullptr);
// For each prime and each m <= pole_bound: break and conductors of a random
// c t^-m + ... . Multiples of p are counted as skipped.
SuiteResult oracle_suite(const SuiteConfig &cfg);

std::vector<SuiteResult> selftest(const SuiteConfig &cfg);

} // namespace swan

#endif
