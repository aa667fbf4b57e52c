#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "toplink/set_system.hpp"

namespace toplink {

enum class FuzzMode { exhaustive, random_trials };

// Individual invariants the harness can exercise; combined as a bit mask.
enum FuzzChecks : unsigned {
    check_kst = 1u << 0,
    check_power_mean = 1u << 1,
    check_identities = 1u << 2,
    check_atoms = 1u << 3,
    check_everything = (1u << 4) - 1,
};

struct FuzzConfig {
    FuzzMode mode = FuzzMode::random_trials;
    unsigned m_max = 4;
    unsigned a_max = 8;
    std::vector<unsigned> r_values = {2, 3};
    std::uint64_t trials = 1000; // random mode only
    std::uint64_t seed = 0;
    unsigned checks = check_everything;
};

struct FuzzViolation {
    std::string check;
    unsigned r = 0; // 0 for r-independent checks
    SetSystem system;
};

struct FuzzSummary {
    std::uint64_t systems = 0;
    std::uint64_t checks_run = 0;
    std::uint64_t violation_count = 0;
    std::map<std::string, std::uint64_t> violations_by_check;
    std::vector<FuzzViolation> sample;      // first few encountered
    std::optional<FuzzViolation> minimal;   // smallest by (m, a, masks, r)
    FuzzConfig config;
};

namespace detail {

inline std::vector<std::uint64_t> violation_key(const FuzzViolation& v) {
    std::vector<std::uint64_t> key{v.system.size(), v.system.ground_size};
    for (const auto& s : v.system.subsets)
        for (std::size_t i = 0; i < v.system.ground_size; ++i)
            key.push_back(s.test(i) ? 1 : 0);
    key.push_back(v.r);
    return key;
}

inline void record_violation(FuzzSummary& sum, FuzzViolation v) {
    ++sum.violation_count;
    ++sum.violations_by_check[v.check];
    if (!sum.minimal || violation_key(v) < violation_key(*sum.minimal))
        sum.minimal = v;
    if (sum.sample.size() < 16) sum.sample.push_back(std::move(v));
}

inline Int atom_power_sum(const AtomDecomposition& dec, unsigned r) {
    Int acc = 0;
    for (const auto& [sig, mu] : dec.atoms)
        acc += int_pow(Int(sig.count()), r) * mu;
    return acc;
}

inline void fuzz_one(const SetSystem& sys, const FuzzConfig& cfg, FuzzSummary& sum) {
    ++sum.systems;
    const auto fail = [&](const char* check, unsigned r) {
        record_violation(sum, FuzzViolation{check, r, sys});
    };
    const auto run = [&](bool ok, const char* check, unsigned r) {
        ++sum.checks_run;
        if (!ok) fail(check, r);
    };

    std::optional<AtomDecomposition> dec;
    if (cfg.checks & (check_atoms)) {
        dec = atom_decomposition(sys);
        std::uint64_t count = 0, weight = 0;
        for (const auto& [sig, mu] : dec->atoms) {
            count += mu;
            weight += sig.count() * mu;
        }
        run(count == sys.ground_size, "atom_count", 0);
        run(weight == total_size(sys), "atom_weight", 0);
    }

    for (unsigned r : cfg.r_values) {
        if (cfg.checks & check_kst)
            run(verify_kst(sys, r).holds, "kst", r);

        std::optional<Int> osum;
        if (cfg.checks & (check_power_mean | check_atoms))
            osum = ordered_intersection_sum(sys, r);

        if (cfg.checks & check_power_mean) {
            const Int lhs = int_pow(Int(sys.ground_size), r - 1) * *osum;
            const Int rhs = int_pow(Int(total_size(sys)), r);
            run(lhs >= rhs, "power_mean", r);
        }
        if (cfg.checks & check_identities) {
            const ChainIdentityReport rep = chain_identities(sys, r);
            run(rep.identity_holds, "identity_double_count", r);
            run(rep.power_mean_holds, "identity_power_mean", r);
            run(rep.binom_power_holds, "identity_binom_power", r);
        }
        if (cfg.checks & check_atoms)
            run(atom_power_sum(*dec, r) == *osum, "atom_power_sum", r);
    }
}

} // namespace detail

/// Exhaustive mode walks every membership matrix with exactly m_max subsets
/// over a_max elements (2^(m*a) systems, capped at 2^24). Random mode draws
/// `trials` systems with m <= m_max, a <= a_max and a per-trial bit density
/// from {1/8, 1/4, 1/2, 3/4}; everything is a pure function of the seed.
inline FuzzSummary run_fuzz(const FuzzConfig& cfg) {
    for (unsigned r : cfg.r_values)
        if (r == 0) throw std::invalid_argument("run_fuzz: r values must be >= 1");
    FuzzSummary sum;
    sum.config = cfg;

    if (cfg.mode == FuzzMode::exhaustive) {
        const unsigned bits = cfg.m_max * cfg.a_max;
        if (bits > 24)
            throw std::invalid_argument("run_fuzz: exhaustive mode capped at m*a <= 24");
        const std::uint64_t end = std::uint64_t{1} << bits;
        for (std::uint64_t word = 0; word < end; ++word) {
            SetSystem sys;
            sys.ground_size = cfg.a_max;
            sys.subsets.assign(cfg.m_max, Bitmask(cfg.a_max));
            for (unsigned j = 0; j < cfg.m_max; ++j)
                for (unsigned q = 0; q < cfg.a_max; ++q)
                    if ((word >> (j * cfg.a_max + q)) & 1) sys.subsets[j].set(q);
            detail::fuzz_one(sys, cfg, sum);
        }
        return sum;
    }

    std::mt19937_64 rng(cfg.seed);
    static constexpr unsigned kDensityEighths[4] = {1, 2, 4, 6};
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const auto m = static_cast<std::size_t>(rng() % (cfg.m_max + 1));
        const auto a = static_cast<std::size_t>(rng() % (cfg.a_max + 1));
        const unsigned thr = kDensityEighths[rng() & 3];
        SetSystem sys;
        sys.ground_size = a;
        sys.subsets.assign(m, Bitmask(a));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t q = 0; q < a; ++q)
                if ((rng() & 7) < thr) sys.subsets[j].set(q);
        detail::fuzz_one(sys, cfg, sum);
    }
    return sum;
}

} // namespace toplink
