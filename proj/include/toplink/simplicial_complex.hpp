#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "toplink/set_system.hpp"

namespace toplink {

/// Sorted list of vertex indices. The empty simplex is never materialized.
using Simplex = std::vector<int>;

/// Abstract simplicial complex stored by its facets (inclusion-maximal
/// simplices). The facet list is an antichain; the downward closure is
/// enumerated on demand and memoized per dimension.
///
/// Vertex labels are opaque strings. Labels may exist without appearing in
/// any facet; such vertices carry no simplex and do not count in f_0.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the complex generated by `simplices`: indices are validated,
    /// each simplex is sorted, and non-maximal simplices are dropped.
    SimplicialComplex(std::vector<std::string> labels,
                      const std::vector<Simplex>& simplices)
        : labels_(std::move(labels)) {
        std::vector<Simplex> cleaned;
        cleaned.reserve(simplices.size());
        for (Simplex s : simplices) {
            if (s.empty())
                throw std::invalid_argument("SimplicialComplex: empty facet");
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("SimplicialComplex: repeated vertex in facet");
            if (s.front() < 0 || s.back() >= static_cast<int>(labels_.size()))
                throw std::invalid_argument("SimplicialComplex: facet index out of range");
            cleaned.push_back(std::move(s));
        }
        facets_ = reduce_to_antichain(std::move(cleaned));
    }

    /// r isolated points labeled "1" ... "r".
    static SimplicialComplex discrete(int r) {
        if (r < 1) throw std::invalid_argument("discrete: need at least one point");
        std::vector<std::string> labels;
        std::vector<Simplex> facets;
        for (int i = 0; i < r; ++i) {
            labels.push_back(std::to_string(i + 1));
            facets.push_back({i});
        }
        return SimplicialComplex(std::move(labels), facets);
    }

    SimplicialComplex(const SimplicialComplex& o)
        : labels_(o.labels_), facets_(o.facets_) {}

    SimplicialComplex& operator=(const SimplicialComplex& o) {
        if (this != &o) {
            labels_ = o.labels_;
            facets_ = o.facets_;
            std::lock_guard<std::mutex> lock(cache_mutex_);
            closure_cache_.clear();
        }
        return *this;
    }

    SimplicialComplex(SimplicialComplex&& o) noexcept
        : labels_(std::move(o.labels_)), facets_(std::move(o.facets_)) {}

    SimplicialComplex& operator=(SimplicialComplex&& o) noexcept {
        labels_ = std::move(o.labels_);
        facets_ = std::move(o.facets_);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        closure_cache_.clear();
        return *this;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t vertex_count() const { return labels_.size(); }

    /// -1 for a complex with no simplices.
    int dimension() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return -1;
    }

    /// True when `s` (sorted) is a face of some facet.
    bool contains(const Simplex& s) const {
        for (const auto& f : facets_)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
        return false;
    }

    /// All k-dimensional simplices of the closure, sorted lexicographically.
    /// Memoized; safe for concurrent readers.
    const std::vector<Simplex>& simplices_of_dim(int k) const {
        static const std::vector<Simplex> kEmpty;
        if (k < 0 || k > dimension()) return kEmpty;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = closure_cache_.find(k);
        if (it != closure_cache_.end()) return it->second;

        std::set<Simplex> seen;
        Simplex scratch(k + 1);
        for (const auto& f : facets_) {
            if (static_cast<int>(f.size()) < k + 1) continue;
            enumerate_subsets(f, k + 1, scratch, 0, 0, seen);
        }
        auto [pos, inserted] = closure_cache_.emplace(
            k, std::vector<Simplex>(seen.begin(), seen.end()));
        (void)inserted;
        return pos->second;
    }

    /// counts[k] = number of k-simplices, k = 0 ... dimension.
    std::vector<std::uint64_t> f_vector() const {
        std::vector<std::uint64_t> counts;
        const int d = dimension();
        for (int k = 0; k <= d; ++k)
            counts.push_back(simplices_of_dim(k).size());
        return counts;
    }

private:
    static std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> simplices) {
        std::sort(simplices.begin(), simplices.end());
        simplices.erase(std::unique(simplices.begin(), simplices.end()),
                        simplices.end());
        std::vector<Simplex> maximal;
        for (const auto& s : simplices) {
            bool dominated = false;
            for (const auto& t : simplices) {
                if (t.size() <= s.size()) continue;
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) maximal.push_back(s);
        }
        return maximal;
    }

    static void enumerate_subsets(const Simplex& f, int want, Simplex& scratch,
                                  std::size_t from, int have, std::set<Simplex>& out) {
        if (have == want) {
            out.insert(scratch);
            return;
        }
        for (std::size_t i = from;
             i + static_cast<std::size_t>(want - have) <= f.size(); ++i) {
            scratch[have] = f[i];
            enumerate_subsets(f, want, scratch, i + 1, have + 1, out);
        }
    }

    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    mutable std::map<int, std::vector<Simplex>> closure_cache_;
    mutable std::mutex cache_mutex_;
};

/// Join K * L: vertex set is the tagged disjoint union ("L:x", "R:y"),
/// facets are F ∪ G over facet pairs. Joining with a complex that has
/// neither vertices nor facets returns the other complex unchanged.
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.vertex_count() == 0 && K.facets().empty()) return L;
    if (L.vertex_count() == 0 && L.facets().empty()) return K;

    std::vector<std::string> labels;
    labels.reserve(K.vertex_count() + L.vertex_count());
    for (const auto& l : K.labels()) labels.push_back("L:" + l);
    for (const auto& l : L.labels()) labels.push_back("R:" + l);
    const int offset = static_cast<int>(K.vertex_count());

    std::vector<Simplex> facets;
    const auto shifted = [offset](const Simplex& g) {
        Simplex out;
        out.reserve(g.size());
        for (int v : g) out.push_back(v + offset);
        return out;
    };
    if (K.facets().empty()) {
        for (const auto& g : L.facets()) facets.push_back(shifted(g));
    } else if (L.facets().empty()) {
        facets = K.facets();
    } else {
        facets.reserve(K.facets().size() * L.facets().size());
        for (const auto& f : K.facets())
            for (const auto& g : L.facets()) {
                Simplex s = f;
                const Simplex t = shifted(g);
                s.insert(s.end(), t.begin(), t.end());
                facets.push_back(std::move(s));
            }
    }
    return SimplicialComplex(std::move(labels), facets);
}

/// p-fold join of r isolated points: r*p vertices labeled "i:j" (factor i,
/// point j, both 1-based) and r^p facets, one transversal per choice of a
/// point in every factor. Isomorphic to iterating `join`, with flat labels.
inline SimplicialComplex join_power(int r, int p) {
    if (r < 1 || p < 1)
        throw std::invalid_argument("join_power: need r >= 1 and p >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= r; ++j)
            labels.push_back(std::to_string(i) + ":" + std::to_string(j));

    std::vector<Simplex> facets;
    Simplex pick(p);
    const auto rec = [&](auto&& self, int factor) -> void {
        if (factor == p) {
            facets.push_back(pick);
            return;
        }
        for (int j = 0; j < r; ++j) {
            pick[factor] = factor * r + j;
            self(self, factor + 1);
        }
    };
    rec(rec, 0);
    return SimplicialComplex(std::move(labels), facets);
}

/// link(v) = {σ : v ∉ σ, σ ∪ {v} ∈ K}, kept over the ambient vertex set.
/// The link of a vertex whose only simplex is {v} has no facets.
inline SimplicialComplex vertex_link(const SimplicialComplex& K, int v) {
    if (v < 0 || v >= static_cast<int>(K.vertex_count()))
        throw std::invalid_argument("vertex_link: unknown vertex");
    std::vector<Simplex> generated;
    for (const auto& f : K.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Simplex s;
        s.reserve(f.size() - 1);
        for (int u : f)
            if (u != v) s.push_back(u);
        if (!s.empty()) generated.push_back(std::move(s));
    }
    return SimplicialComplex(K.labels(), generated);
}

inline SimplicialComplex vertex_link(const SimplicialComplex& K, const std::string& label) {
    return vertex_link(K, K.index_of(label));
}

/// Intersection of the links of distinct vertices v_1, ..., v_r:
/// {σ : σ ∪ {v_i} ∈ K for every i}. Symmetric in the v_i.
inline SimplicialComplex link_intersection(const SimplicialComplex& K,
                                           const std::vector<int>& vs) {
    if (vs.empty())
        throw std::invalid_argument("link_intersection: need at least one vertex");
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size())
        throw std::invalid_argument("link_intersection: vertices must be distinct");

    bool first = true;
    SimplicialComplex acc;
    for (int v : vs) {
        SimplicialComplex lk = vertex_link(K, v);
        if (first) {
            acc = std::move(lk);
            first = false;
            continue;
        }
        // facets(A ∩ B) = maximal nonempty pairwise intersections of facets.
        std::vector<Simplex> gens;
        for (const auto& f : acc.facets())
            for (const auto& g : lk.facets()) {
                Simplex s;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(s));
                if (!s.empty()) gens.push_back(std::move(s));
            }
        acc = SimplicialComplex(K.labels(), gens);
    }
    return acc;
}

/// Ground set: the k-simplices of K (lexicographic order). Subset S_v for
/// every vertex v: the k-simplices σ with σ ∪ {v} in K, i.e. σ ∈ link(v).
struct LinkSystem {
    SetSystem system;            // one subset per vertex, in label order
    std::vector<Simplex> ground; // the k-simplices backing the indices
};

inline LinkSystem links_as_set_system(const SimplicialComplex& K, int k) {
    if (k < 0) throw std::invalid_argument("links_as_set_system: k must be >= 0");
    LinkSystem out;
    out.ground = K.simplices_of_dim(k);
    const std::size_t a = out.ground.size();
    out.system.ground_size = a;
    out.system.subsets.assign(K.vertex_count(), Bitmask(a));

    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < out.ground.size(); ++i) index[out.ground[i]] = i;

    // Each (k+1)-simplex τ contributes τ \ {v} to S_v for every v ∈ τ.
    for (const auto& tau : K.simplices_of_dim(k + 1)) {
        for (int v : tau) {
            Simplex sigma;
            sigma.reserve(tau.size() - 1);
            for (int u : tau)
                if (u != v) sigma.push_back(u);
            out.system.subsets[v].set(index.at(sigma));
        }
    }
    return out;
}

/// Sorted adjacency lists of a graph (a complex of dimension at most 1).
inline std::vector<std::vector<int>> graph_adjacency(const SimplicialComplex& G) {
    if (G.dimension() > 1)
        throw std::invalid_argument("graph_adjacency: complex is not a graph");
    std::vector<std::vector<int>> adj(G.vertex_count());
    for (const auto& e : G.simplices_of_dim(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

} // namespace toplink
