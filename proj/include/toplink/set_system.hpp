#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "toplink/bitmask.hpp"
#include "toplink/numbers.hpp"

namespace toplink {

/// Finite family S_1, ..., S_m of subsets of the ground set {0, ..., a-1}.
/// Subsets are stored as bit masks of width ground_size; duplicates among
/// the S_j are allowed (the family is a list, not a set).
struct SetSystem {
    std::size_t ground_size = 0;
    std::vector<Bitmask> subsets;

    std::size_t size() const { return subsets.size(); }

    static SetSystem from_lists(std::size_t a,
                                const std::vector<std::vector<std::size_t>>& lists) {
        SetSystem sys;
        sys.ground_size = a;
        sys.subsets.reserve(lists.size());
        for (const auto& lst : lists) {
            Bitmask m(a);
            for (std::size_t e : lst) {
                if (e >= a)
                    throw std::invalid_argument("SetSystem: element out of ground range");
                m.set(e);
            }
            sys.subsets.push_back(std::move(m));
        }
        return sys;
    }
};

/// Sum of the subset cardinalities, Σ_j |S_j|.
inline std::uint64_t total_size(const SetSystem& sys) {
    std::uint64_t t = 0;
    for (const auto& s : sys.subsets) t += s.count();
    return t;
}

/// d_q = number of subsets containing ground element q, for every q.
struct DegreeProfile {
    std::vector<std::uint32_t> degrees;
};

inline DegreeProfile degree_profile(const SetSystem& sys) {
    DegreeProfile p;
    p.degrees.assign(sys.ground_size, 0);
    for (const auto& s : sys.subsets)
        s.for_each_set([&](std::size_t q) { ++p.degrees[q]; });
    return p;
}

namespace detail {

// Enumerates r-combinations of subsets, carrying the running intersection in
// a preallocated stack so no node allocates. Empty prefixes are pruned: every
// extension contributes 0.
template <typename Leaf>
void combinations_rec(const SetSystem& sys, std::vector<Bitmask>& stk,
                      std::size_t start, unsigned depth, unsigned r, Leaf&& leaf) {
    if (depth == r) {
        leaf(stk[depth]);
        return;
    }
    if (!stk[depth].any()) return;
    const std::size_t need = r - depth;
    for (std::size_t i = start; i + need <= sys.subsets.size(); ++i) {
        stk[depth + 1] = stk[depth];
        stk[depth + 1] &= sys.subsets[i];
        combinations_rec(sys, stk, i + 1, depth + 1, r, leaf);
    }
}

template <typename Acc>
void ordered_sum_rec(const SetSystem& sys, std::vector<Bitmask>& stk,
                     unsigned depth, unsigned r, Acc& acc) {
    if (depth == r) {
        acc += static_cast<Acc>(stk[depth].count());
        return;
    }
    if (!stk[depth].any()) return;
    for (const auto& s : sys.subsets) {
        stk[depth + 1] = stk[depth];
        stk[depth + 1] &= s;
        ordered_sum_rec(sys, stk, depth + 1, r, acc);
    }
}

inline std::vector<Bitmask> intersection_stack(const SetSystem& sys, unsigned r) {
    return std::vector<Bitmask>(r + 1, Bitmask::full(sys.ground_size));
}

} // namespace detail

/// max over r-element subfamilies {S_{j_1}, ..., S_{j_r}} (distinct indices)
/// of |S_{j_1} ∩ ... ∩ S_{j_r}|; zero when fewer than r subsets exist.
inline std::uint64_t max_r_intersection(const SetSystem& sys, unsigned r) {
    if (r == 0) throw std::invalid_argument("max_r_intersection: r must be >= 1");
    if (sys.size() < r) return 0;
    std::uint64_t best = 0;
    auto stk = detail::intersection_stack(sys, r);

    // Same combination walk as below, but additionally prunes branches whose
    // running intersection cannot beat the current best.
    const auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == r) {
            const std::uint64_t c = stk[depth].count();
            if (c > best) best = c;
            return;
        }
        if (stk[depth].count() <= best) return;
        const std::size_t need = r - depth;
        for (std::size_t i = start; i + need <= sys.subsets.size(); ++i) {
            stk[depth + 1] = stk[depth];
            stk[depth + 1] &= sys.subsets[i];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// Σ over ordered r-tuples (j_1, ..., j_r) in [m]^r, repeats allowed, of
/// |S_{j_1} ∩ ... ∩ S_{j_r}|.
inline Int ordered_intersection_sum(const SetSystem& sys, unsigned r) {
    if (r == 0) throw std::invalid_argument("ordered_intersection_sum: r must be >= 1");
    if (sys.size() == 0) return 0;
    auto stk = detail::intersection_stack(sys, r);
    // a * m^r bounds the sum; stay in machine words when that fits.
    const Int limit = Int(sys.ground_size) * int_pow(Int(sys.size()), r);
    if (limit < (Int(1) << 62)) {
        std::uint64_t acc = 0;
        detail::ordered_sum_rec(sys, stk, 0, r, acc);
        return Int(acc);
    }
    Int acc = 0;
    detail::ordered_sum_rec(sys, stk, 0, r, acc);
    return acc;
}

/// r(m a^{1-1/r} s^{1/r} + a) as a double. Display only; every verdict in
/// this module is decided in exact integer arithmetic.
inline double kst_bound(unsigned r, std::size_t m, std::size_t a, std::uint64_t s) {
    if (r == 0) throw std::invalid_argument("kst_bound: r must be >= 1");
    const double ad = static_cast<double>(a);
    const double expo = 1.0 - 1.0 / static_cast<double>(r);
    return r * (static_cast<double>(m) * std::pow(ad, expo) *
                    std::pow(static_cast<double>(s), 1.0 / static_cast<double>(r)) +
                ad);
}

/// Exact form of total <= r(m a^{1-1/r} s^{1/r} + a): when total > r*a the
/// inequality is equivalent to (total - r*a)^r <= r^r m^r a^{r-1} s, which
/// avoids real roots entirely.
inline bool kst_holds_exact(const Int& total, unsigned r, const Int& m,
                            const Int& a, const Int& s) {
    if (r == 0) throw std::invalid_argument("kst_holds_exact: r must be >= 1");
    const Int ra = Int(r) * a;
    if (total <= ra) return true;
    return int_pow(total - ra, r) <=
           int_pow(Int(r), r) * int_pow(m, r) * int_pow(a, r - 1) * s;
}

struct KstReport {
    unsigned r = 0;
    std::size_t m = 0;
    std::size_t a = 0;
    std::uint64_t total = 0;            // Σ|S_j|
    std::uint64_t max_intersection = 0; // s
    double bound = 0.0;                 // display only
    bool holds = false;                 // exact verdict
};

/// Checks Σ|S_j| <= r(m a^{1-1/r} s^{1/r} + a) with s the maximal r-fold
/// intersection of the family.
inline KstReport verify_kst(const SetSystem& sys, unsigned r) {
    KstReport rep;
    rep.r = r;
    rep.m = sys.size();
    rep.a = sys.ground_size;
    rep.total = total_size(sys);
    rep.max_intersection = max_r_intersection(sys, r);
    rep.bound = kst_bound(r, rep.m, rep.a, rep.max_intersection);
    rep.holds = kst_holds_exact(Int(rep.total), r, Int(rep.m), Int(rep.a),
                                Int(rep.max_intersection));
    return rep;
}

struct PowerMeanReport {
    unsigned r = 0;
    std::size_t m = 0;
    std::size_t a = 0;
    Int lhs;      // a^{r-1} * ordered_intersection_sum
    Int rhs;      // (Σ|S_j|)^r
    bool holds = false;
    bool equality = false;
};

/// Checks a^{r-1} * Σ_{ordered r-tuples} |∩| >= (Σ|S_j|)^r.
inline PowerMeanReport verify_power_mean(const SetSystem& sys, unsigned r) {
    if (r == 0) throw std::invalid_argument("verify_power_mean: r must be >= 1");
    PowerMeanReport rep;
    rep.r = r;
    rep.m = sys.size();
    rep.a = sys.ground_size;
    rep.lhs = int_pow(Int(sys.ground_size), r - 1) * ordered_intersection_sum(sys, r);
    rep.rhs = int_pow(Int(total_size(sys)), r);
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    return rep;
}

struct ChainIdentityReport {
    unsigned r = 0;
    // (a) Σ_q C(d_q, r) counts (element, r-subfamily) incidences two ways.
    Int binom_degree_sum;
    Int unordered_intersection_sum;
    bool identity_holds = false;
    // (b) restricted power mean: (Σ_{q∈Q} d_q)^r <= |Q|^{r-1} Σ_{q∈Q} d_q^r
    //     over Q = {q : d_q >= r}.
    Int filtered_sum_pow;
    Int filtered_power_bound;
    bool power_mean_holds = false;
    std::size_t filtered_count = 0; // |Q|
    // (c) d_q^r <= r^r C(d_q, r) for every q in Q.
    bool binom_power_holds = false;
};

/// The three exact steps that turn the double count into the closed bound.
inline ChainIdentityReport chain_identities(const SetSystem& sys, unsigned r) {
    if (r == 0) throw std::invalid_argument("chain_identities: r must be >= 1");
    ChainIdentityReport rep;
    rep.r = r;

    const DegreeProfile prof = degree_profile(sys);
    rep.binom_degree_sum = 0;
    for (std::uint32_t d : prof.degrees) rep.binom_degree_sum += binomial(d, r);

    rep.unordered_intersection_sum = 0;
    if (sys.size() >= r) {
        auto stk = detail::intersection_stack(sys, r);
        Int acc = 0;
        detail::combinations_rec(sys, stk, 0, 0, r,
                                 [&](const Bitmask& leaf) { acc += leaf.count(); });
        rep.unordered_intersection_sum = acc;
    }
    rep.identity_holds = rep.binom_degree_sum == rep.unordered_intersection_sum;

    Int filtered_sum = 0, filtered_pow_sum = 0;
    rep.binom_power_holds = true;
    const Int rr = int_pow(Int(r), r);
    for (std::uint32_t d : prof.degrees) {
        if (d < r) continue;
        ++rep.filtered_count;
        filtered_sum += d;
        filtered_pow_sum += int_pow(Int(d), r);
        if (int_pow(Int(d), r) > rr * binomial(d, r)) rep.binom_power_holds = false;
    }
    rep.filtered_sum_pow = int_pow(filtered_sum, r);
    rep.filtered_power_bound =
        int_pow(Int(rep.filtered_count), r - 1) * filtered_pow_sum;
    rep.power_mean_holds = rep.filtered_sum_pow <= rep.filtered_power_bound;
    return rep;
}

/// μ_A = number of ground elements whose membership signature (the set of
/// subsets containing them) is exactly A ⊆ [m]. Only nonzero atoms are kept.
struct AtomDecomposition {
    std::size_t m = 0;
    std::map<Bitmask, std::uint64_t> atoms;
};

inline AtomDecomposition atom_decomposition(const SetSystem& sys) {
    AtomDecomposition dec;
    dec.m = sys.size();
    for (std::size_t q = 0; q < sys.ground_size; ++q) {
        Bitmask sig(sys.size());
        for (std::size_t j = 0; j < sys.subsets.size(); ++j)
            if (sys.subsets[j].test(q)) sig.set(j);
        ++dec.atoms[sig];
    }
    return dec;
}

} // namespace toplink
