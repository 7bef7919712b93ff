#include "sparsepave/starstar.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace sparsepave {

namespace {

std::string subset_str(RSubset s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

}  // namespace

StarStarViolation::StarStarViolation(RSubset a_, RSubset b_)
    : std::domain_error("circuits " + subset_str(a_) + " and " + subset_str(b_) +
                        " share " + std::to_string(intersection_size(a_, b_)) +
                        " elements, too many for one circuit family"),
      a(a_),
      b(b_) {}

StarStarReport satisfies_star_star(const SubsetFamily& family, int r) {
    if (r < 1) throw std::domain_error("member cardinality must be positive");
    for (const RSubset& m : family.members())
        if (m.card() != r)
            throw std::domain_error("family member " + subset_str(m) +
                                    " does not have cardinality " + std::to_string(r));
    const auto& mem = family.members();
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            if (intersection_size(mem[i], mem[j]) > r - 2)
                return StarStarReport{false, std::make_pair(mem[i], mem[j])};
        }
    }
    return StarStarReport{true, std::nullopt};
}

SubsetFamily greedy_star_star(GroundSet g, int r) {
    if (r < 2 || r > g.n - 1)
        throw std::domain_error("rank must satisfy 2 <= r <= n-1, got r = " + std::to_string(r));
    std::vector<RSubset> chosen;
    SubsetFamily all = enumerate_rsubsets(g, r);
    for (const RSubset& cand : all.members()) {
        bool ok = true;
        for (const RSubset& c : chosen) {
            if (intersection_size(cand, c) > r - 2) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(cand);
    }
    return SubsetFamily::from_sorted_unchecked(std::move(chosen));
}

BigRational star_star_upper_bound(int n, int r) {
    if (n < 3 || n > 64) throw std::domain_error("need 3 <= n <= 64");
    if (r < 2 || r > n - 1)
        throw std::domain_error("rank must satisfy 2 <= r <= n-1, got r = " + std::to_string(r));
    return BigRational(BigInt(binom64(n, r + 1)), BigInt(n - r));
}

BigInt sparse_count_lower_bound(int n, int r) {
    if (n < 3 || n > 64) throw std::domain_error("need 3 <= n <= 64");
    if (r < 2 || r > n - 1)
        throw std::domain_error("rank must satisfy 2 <= r <= n-1, got r = " + std::to_string(r));
    std::uint64_t exponent = binom64(n, r) / (static_cast<std::uint64_t>(r) *
                                                  static_cast<std::uint64_t>(n - r) +
                                              1);
    if (exponent > 1'000'000)
        throw std::domain_error("2^" + std::to_string(exponent) +
                                " is too large to materialize");
    return BigInt(1) << static_cast<unsigned>(exponent);
}

namespace {

// 256-bit set, enough for binom(10, 5) = 252 conflict-graph vertices.
struct Bits256 {
    std::uint64_t w[4] = {0, 0, 0, 0};

    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }
    int lowest() const {
        for (int k = 0; k < 4; ++k)
            if (w[k]) return 64 * k + std::countr_zero(w[k]);
        return -1;
    }
    Bits256 and_not(const Bits256& o) const {
        Bits256 r;
        for (int k = 0; k < 4; ++k) r.w[k] = w[k] & ~o.w[k];
        return r;
    }
    Bits256 intersect(const Bits256& o) const {
        Bits256 r;
        for (int k = 0; k < 4; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
};

struct MaxSearch {
    const std::vector<Bits256>& adj;
    std::vector<int> current;
    std::vector<int> best;
    int best_size;

    // Upper bound on how many more vertices an independent set inside cand
    // can hold: greedily cover cand by cliques, one pick per clique.
    int clique_cover_bound(Bits256 cand) const {
        int classes = 0;
        std::vector<Bits256> common;  // per class: vertices adjacent to all members
        for (int v = cand.lowest(); v >= 0;) {
            bool placed = false;
            for (Bits256& c : common) {
                if (c.test(v)) {
                    c = c.intersect(adj[static_cast<std::size_t>(v)]);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                common.push_back(adj[static_cast<std::size_t>(v)]);
                ++classes;
            }
            cand.clear(v);
            v = cand.lowest();
        }
        return classes;
    }

    void run(Bits256 cand) {
        if (static_cast<int>(current.size()) + cand.count() <= best_size) return;
        if (static_cast<int>(current.size()) + clique_cover_bound(cand) <= best_size) return;
        int v = cand.lowest();
        if (v < 0) {
            // cand empty and the count bound above passed, so this is strictly
            // better than the incumbent.
            best = current;
            best_size = static_cast<int>(current.size());
            return;
        }
        Bits256 without_v = cand;
        without_v.clear(v);
        // Include first: families are then visited in lexicographic order and
        // the first maximum found is the lexicographically least one.
        current.push_back(v);
        run(without_v.and_not(adj[static_cast<std::size_t>(v)]));
        current.pop_back();
        // If v conflicts with nothing else in cand, every family avoiding v
        // extends by v to a strictly larger one, so the exclude branch holds
        // no maximum.
        if (adj[static_cast<std::size_t>(v)].intersect(without_v).empty()) return;
        run(without_v);
    }
};

}  // namespace

SubsetFamily max_star_star_exact(GroundSet g, int r) {
    if (g.n > 10)
        throw std::domain_error("exact search is limited to n <= 10, got n = " +
                                std::to_string(g.n));
    if (r < 2 || r > g.n - 1)
        throw std::domain_error("rank must satisfy 2 <= r <= n-1, got r = " + std::to_string(r));

    SubsetFamily verts = enumerate_rsubsets(g, r);
    const int V = static_cast<int>(verts.size());
    std::vector<Bits256> adj(static_cast<std::size_t>(V));
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            if (intersection_size(verts[static_cast<std::size_t>(i)],
                                  verts[static_cast<std::size_t>(j)]) > r - 2) {
                adj[static_cast<std::size_t>(i)].set(j);
                adj[static_cast<std::size_t>(j)].set(i);
            }
        }
    }

    std::vector<int> seed;
    SubsetFamily warm = greedy_star_star(g, r);
    for (const RSubset& m : warm.members()) seed.push_back(verts.index_of(m));

    // Relabeling the ground set preserves the conflict relation and acts
    // transitively on the r-subsets, so some maximum family contains the
    // lexicographically least r-subset {1..r} — and a family that starts
    // with it precedes every family that does not.  The lexicographically
    // least maximum therefore contains vertex 0, which the search can fix
    // up front.
    MaxSearch search{adj, {0}, seed, static_cast<int>(seed.size())};
    Bits256 rest;
    for (int v = 1; v < V; ++v) rest.set(v);
    search.run(rest.and_not(adj[0]));

    std::vector<RSubset> out;
    out.reserve(search.best.size());
    for (int v : search.best) out.push_back(verts[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end(), lex_less);
    return SubsetFamily::from_sorted_unchecked(std::move(out));
}

}  // namespace sparsepave
