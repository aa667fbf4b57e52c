#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "toplink/numbers.hpp"
#include "toplink/simplicial_complex.hpp"

namespace toplink {

/// Exponent d + 1 - r^(1-d) in the face-count bound for complexes whose
/// r-fold link intersections stay small.
inline Rat face_count_exponent(unsigned d, unsigned r) {
    if (d < 1) throw std::invalid_argument("face_count_exponent: d must be >= 1");
    if (r < 2) throw std::invalid_argument("face_count_exponent: r must be >= 2");
    return Rat(d) + 1 - rat_pow(Rat(r), 1 - static_cast<std::int64_t>(d));
}

enum class BoundVariant { embeddable, linkless };

/// r = 3 governs complexes embeddable in R^(2d); r = 4 the linklessly
/// embeddable ones in R^(2d+1).
inline Rat variant_exponent(unsigned d, BoundVariant v) {
    return face_count_exponent(d, v == BoundVariant::embeddable ? 3 : 4);
}

/// The exponent produced by one inductive step,
/// 1 + (r-1)d/r + (d - r^(2-d))/r; algebraically equal to
/// face_count_exponent(d, r).
inline Rat inductive_step_exponent(unsigned d, unsigned r) {
    if (d < 1) throw std::invalid_argument("inductive_step_exponent: d must be >= 1");
    if (r < 2) throw std::invalid_argument("inductive_step_exponent: r must be >= 2");
    const Rat first = Rat(Int(r - 1) * d, Int(r));
    const Rat second = (Rat(d) - rat_pow(Rat(r), 2 - static_cast<std::int64_t>(d))) / r;
    return Rat(1) + first + second;
}

namespace detail {

inline std::optional<Int> exact_nth_root(const Int& b, unsigned j) {
    if (b <= 0 || j == 0) return std::nullopt;
    if (b == 1) return Int(1);
    const unsigned bits = boost::multiprecision::msb(b) + 1;
    Int lo = 1, hi = Int(1) << (bits / j + 1);
    while (lo <= hi) {
        const Int mid = (lo + hi) / 2;
        const Int p = int_pow(mid, j);
        if (p == b) return mid;
        if (p < b) lo = mid + 1;
        else hi = mid - 1;
    }
    return std::nullopt;
}

} // namespace detail

/// Positive real of the form Π base^exponent with integer bases and exact
/// rational exponents. Bases are kept pairwise coprime and never perfect
/// powers, so a value is rational exactly when all exponents are integers.
/// Comparisons are exact: rational exponents are cleared by a common
/// denominator and the resulting integer powers compared directly.
class SymbolicConstant {
public:
    SymbolicConstant() = default; // value 1

    static SymbolicConstant from_rational(const Rat& v) {
        if (v <= 0)
            throw std::invalid_argument("SymbolicConstant: value must be positive");
        SymbolicConstant c;
        c.insert(boost::multiprecision::numerator(v), 1);
        c.insert(boost::multiprecision::denominator(v), -1);
        c.normalize_powers();
        return c;
    }

    static SymbolicConstant from_int(std::int64_t v) { return from_rational(Rat(v)); }

    SymbolicConstant operator*(const SymbolicConstant& o) const {
        SymbolicConstant out = *this;
        for (const auto& [b, e] : o.factors_) out.insert_exp(b, e);
        out.normalize_powers();
        return out;
    }

    SymbolicConstant pow(const Rat& e) const {
        SymbolicConstant out;
        if (e == 0) return out;
        for (const auto& [b, x] : factors_) out.factors_[b] = x * e;
        out.normalize_powers();
        return out;
    }

    SymbolicConstant root(unsigned r) const {
        if (r == 0) throw std::invalid_argument("SymbolicConstant: zeroth root");
        return pow(Rat(1, r));
    }

    bool is_rational() const {
        for (const auto& [b, e] : factors_)
            if (boost::multiprecision::denominator(e) != 1) return false;
        return true;
    }

    Rat to_rational() const {
        if (!is_rational())
            throw std::logic_error("SymbolicConstant: not a rational value");
        Rat v = 1;
        for (const auto& [b, e] : factors_)
            v *= rat_pow(Rat(b), static_cast<std::int64_t>(
                                     boost::multiprecision::numerator(e)));
        return v;
    }

    double to_double() const {
        double v = 1.0;
        for (const auto& [b, e] : factors_)
            v *= std::pow(static_cast<double>(b), static_cast<double>(e));
        return v;
    }

    /// -1, 0, +1 against `o`, decided exactly. Throws std::overflow_error if
    /// clearing denominators would need astronomically large integers.
    int compare(const SymbolicConstant& o) const {
        const SymbolicConstant q = *this * o.pow(-1);
        if (q.factors_.empty()) return 0;
        bool has_pos = false, has_neg = false;
        for (const auto& [b, e] : q.factors_) {
            if (e > 0) has_pos = true;
            else has_neg = true;
        }
        if (!has_neg) return 1;
        if (!has_pos) return -1;

        Int common_den = 1;
        for (const auto& [b, e] : q.factors_)
            common_den = boost::multiprecision::lcm(
                common_den, boost::multiprecision::denominator(e));

        // Bit-size estimate before committing to the big powers.
        Int est_bits = 0;
        for (const auto& [b, e] : q.factors_) {
            const Int scaled = boost::multiprecision::abs(
                boost::multiprecision::numerator(e) * (common_den /
                boost::multiprecision::denominator(e)));
            est_bits += scaled * (boost::multiprecision::msb(b) + 1);
        }
        if (est_bits > (Int(1) << 25))
            throw std::overflow_error("SymbolicConstant::compare: exponents too large");

        Int pos = 1, neg = 1;
        for (const auto& [b, e] : q.factors_) {
            const Int scaled = boost::multiprecision::numerator(e) *
                               (common_den / boost::multiprecision::denominator(e));
            if (scaled > 0)
                pos *= int_pow(b, static_cast<std::uint64_t>(scaled));
            else
                neg *= int_pow(b, static_cast<std::uint64_t>(-scaled));
        }
        if (pos == neg) return 0;
        return pos > neg ? 1 : -1;
    }

    bool operator==(const SymbolicConstant& o) const { return compare(o) == 0; }
    bool operator<(const SymbolicConstant& o) const { return compare(o) < 0; }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        if (is_rational()) return rational_string(to_rational(), false);
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, e] : factors_) {
            if (!first) os << "*";
            first = false;
            os << b.str();
            if (e == 1) continue;
            if (boost::multiprecision::denominator(e) == 1)
                os << "^" << boost::multiprecision::numerator(e).str();
            else
                os << "^(" << rational_string(e) << ")";
        }
        return os.str();
    }

    const std::map<Int, Rat>& factors() const { return factors_; }

private:
    void insert(Int b, Rat e) { insert_exp(std::move(b), std::move(e)); }

    // Coprime-base refinement: splitting along gcds keeps the invariant that
    // stored bases are pairwise coprime.
    void insert_exp(Int b, Rat e) {
        std::vector<std::pair<Int, Rat>> work{{std::move(b), std::move(e)}};
        while (!work.empty()) {
            auto [base, exp] = std::move(work.back());
            work.pop_back();
            if (base == 1 || exp == 0) continue;
            if (base <= 0)
                throw std::invalid_argument("SymbolicConstant: nonpositive base");

            Int key = 0;
            for (const auto& [k, f] : factors_) {
                if (boost::multiprecision::gcd(base, k) > 1) {
                    key = k;
                    break;
                }
            }
            if (key == 0) {
                auto it = factors_.find(base);
                if (it == factors_.end()) {
                    factors_.emplace(std::move(base), std::move(exp));
                } else {
                    it->second += exp;
                    if (it->second == 0) factors_.erase(it);
                }
                continue;
            }
            const Rat f = factors_.at(key);
            factors_.erase(key);
            const Int g = boost::multiprecision::gcd(base, key);
            work.emplace_back(g, f + exp);
            work.emplace_back(key / g, f);
            work.emplace_back(base / g, exp);
        }
    }

    // Replace any base that is a perfect power by its primitive root; the
    // substitution can re-trigger merges, so iterate to a fixed point.
    void normalize_powers() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = factors_.begin(); it != factors_.end(); ++it) {
                const Int& b = it->first;
                if (b <= 3) continue;
                const unsigned maxj =
                    std::min<unsigned>(63, boost::multiprecision::msb(b) + 1);
                for (unsigned j = maxj; j >= 2; --j) {
                    if (auto root = detail::exact_nth_root(b, j)) {
                        const Rat e = it->second * j;
                        factors_.erase(it);
                        insert_exp(*root, e);
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }

    std::map<Int, Rat> factors_;
};

/// One step of the constant recurrence C' = r * C^(1/r).
inline SymbolicConstant constant_step(const SymbolicConstant& prev, unsigned r) {
    if (r < 2) throw std::invalid_argument("constant_step: r must be >= 2");
    return SymbolicConstant::from_int(static_cast<std::int64_t>(r)) * prev.root(r);
}

/// C_1, ..., C_d with C_1 = c1 and C_{k+1} = r * C_k^(1/r).
inline std::vector<SymbolicConstant> constant_chain(const Rat& c1, unsigned r,
                                                    unsigned d) {
    if (d < 1) throw std::invalid_argument("constant_chain: d must be >= 1");
    std::vector<SymbolicConstant> chain{SymbolicConstant::from_rational(c1)};
    for (unsigned k = 1; k < d; ++k)
        chain.push_back(constant_step(chain.back(), r));
    return chain;
}

struct ProbeConfig {
    std::uint64_t tuple_budget = 1'000'000;
    std::uint64_t seed = 0;
};

struct ProbeReport {
    int d = 0;
    unsigned r = 0;
    std::size_t vertex_count = 0;  // m: one link subset per vertex
    std::size_t ground_size = 0;   // a: number of (d-1)-simplices
    std::uint64_t total = 0;       // Σ_v |S_v|, equals (d+1) f_d
    std::uint64_t f_top = 0;       // f_d
    std::uint64_t s_value = 0;     // max r-fold link intersection found
    bool exhaustive = false;       // s_value exact, or a sampled lower bound
    std::uint64_t tuples_checked = 0;
    double bound = 0.0;            // display only
    bool holds = false;            // exact verdict with s_value
};

/// Measures one inductive step on a concrete complex: turns the links into
/// a set system over the (d-1)-simplices and checks the total size against
/// the closed-form bound with the observed r-fold intersection maximum.
inline ProbeReport inductive_step_probe(const SimplicialComplex& K, unsigned r,
                                        const ProbeConfig& cfg = {}) {
    const int d = K.dimension();
    if (d < 2) throw std::invalid_argument("inductive_step_probe: dimension must be >= 2");
    if (r < 1) throw std::invalid_argument("inductive_step_probe: r must be >= 1");

    const LinkSystem links = links_as_set_system(K, d - 1);
    const SetSystem& sys = links.system;

    ProbeReport rep;
    rep.d = d;
    rep.r = r;
    rep.vertex_count = sys.size();
    rep.ground_size = sys.ground_size;
    rep.total = total_size(sys);
    rep.f_top = K.simplices_of_dim(d).size();

    const Int combos = binomial(sys.size(), r);
    if (combos <= cfg.tuple_budget) {
        rep.exhaustive = true;
        rep.tuples_checked = static_cast<std::uint64_t>(combos);
        rep.s_value = max_r_intersection(sys, r);
    } else {
        rep.exhaustive = false;
        rep.tuples_checked = cfg.tuple_budget;
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::size_t> idx(sys.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::uint64_t best = 0;
        for (std::uint64_t t = 0; t < cfg.tuple_budget; ++t) {
            // Partial Fisher-Yates: first r entries become the sample.
            for (unsigned i = 0; i < r; ++i) {
                const std::size_t j = i + rng() % (idx.size() - i);
                std::swap(idx[i], idx[j]);
            }
            Bitmask acc = sys.subsets[idx[0]];
            for (unsigned i = 1; i < r; ++i) acc &= sys.subsets[idx[i]];
            best = std::max<std::uint64_t>(best, acc.count());
        }
        rep.s_value = best;
    }

    rep.bound = kst_bound(r, rep.vertex_count, rep.ground_size, rep.s_value);
    rep.holds = kst_holds_exact(Int(rep.total), r, Int(rep.vertex_count),
                                Int(rep.ground_size), Int(rep.s_value));
    return rep;
}

} // namespace toplink
