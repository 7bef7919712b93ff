#include "sparsepave/matroid.hpp"

#include <algorithm>
#include <bit>

#include "sparsepave/starstar.hpp"

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

ExchangeFailure::ExchangeFailure(RSubset b1_, RSubset b2_, int x_)
    : std::domain_error("basis exchange fails for B1 = " + subset_str(b1_) +
                        ", B2 = " + subset_str(b2_) + ", x = " + std::to_string(x_)),
      b1(b1_),
      b2(b2_),
      x(x_) {}

Matroid::Matroid(GroundSet g, int rank, SubsetFamily bases)
    : ground_(g), rank_(rank), bases_(std::move(bases)) {}

void validate_exchange(GroundSet g, int r, const SubsetFamily& bases) {
    if (r < 0 || r > g.n)
        throw std::domain_error("rank " + std::to_string(r) + " out of range for n = " +
                                std::to_string(g.n));
    if (bases.empty()) throw std::domain_error("a matroid needs at least one basis");
    for (const RSubset& b : bases.members()) {
        if (b.card() != r)
            throw std::domain_error("basis " + subset_str(b) + " does not have cardinality " +
                                    std::to_string(r));
        if (!b.subset_of(RSubset{g.full_mask()}))
            throw std::domain_error("basis " + subset_str(b) + " leaves the ground set");
    }

    // Exhaustive (B1, B2, x) scan, bases in canonical order, x ascending, so
    // the reported witness is deterministic.
    const auto& mem = bases.members();
    for (const RSubset& b1 : mem) {
        for (const RSubset& b2 : mem) {
            if (b1 == b2) continue;
            std::uint64_t only1 = b1.bits & ~b2.bits;
            std::uint64_t only2 = b2.bits & ~b1.bits;
            std::uint64_t xs = only1;
            while (xs) {
                int x = std::countr_zero(xs) + 1;
                xs &= xs - 1;
                std::uint64_t dropped = b1.bits & ~(1ull << (x - 1));
                bool found = false;
                std::uint64_t ys = only2;
                while (ys) {
                    int y = std::countr_zero(ys);
                    ys &= ys - 1;
                    if (bases.contains(RSubset{dropped | (1ull << y)})) {
                        found = true;
                        break;
                    }
                }
                if (!found) throw ExchangeFailure(b1, b2, x);
            }
        }
    }
}

Matroid Matroid::from_bases(GroundSet g, int rank, SubsetFamily bases) {
    validate_exchange(g, rank, bases);
    return Matroid(g, rank, std::move(bases));
}

Matroid Matroid::trusted(GroundSet g, int rank, SubsetFamily bases) {
    return Matroid(g, rank, std::move(bases));
}

Matroid Matroid::uniform(GroundSet g, int rank) {
    return Matroid(g, rank, enumerate_rsubsets(g, rank));
}

bool Matroid::independent(RSubset x) const {
    for (const RSubset& b : bases_.members())
        if (x.subset_of(b)) return true;
    return false;
}

int Matroid::rank_of(RSubset x) const {
    // The largest independent subset of x is x's overlap with a best basis.
    int best = 0;
    for (const RSubset& b : bases_.members())
        best = std::max(best, intersection_size(x, b));
    return best;
}

RSubset Matroid::closure_of(RSubset x) const {
    if (!x.subset_of(RSubset{ground_.full_mask()}))
        throw std::domain_error("subset leaves the ground set");
    int rx = rank_of(x);
    RSubset cl = x;
    for (int e = 1; e <= ground_.n; ++e) {
        if (x.contains(e)) continue;
        if (rank_of(x.with(e)) == rx) cl = cl.with(e);
    }
    return cl;
}

Matroid Matroid::dual() const {
    std::vector<RSubset> co;
    co.reserve(bases_.size());
    std::uint64_t full = ground_.full_mask();
    for (const RSubset& b : bases_.members()) co.push_back(RSubset{full & ~b.bits});
    std::sort(co.begin(), co.end(), lex_less);
    return Matroid(ground_, ground_.n - rank_, SubsetFamily::from_sorted_unchecked(std::move(co)));
}

RankRDecomposition decompose_rank_r(const Matroid& m) {
    const int r = m.rank();
    std::vector<RSubset> circuits, dependent;
    SubsetFamily all = enumerate_rsubsets(m.ground(), r);
    for (const RSubset& x : all.members()) {
        if (m.is_basis(x)) continue;
        bool minimal = true;
        for (int e : x.elements()) {
            if (!m.independent(x.without(e))) {
                minimal = false;
                break;
            }
        }
        (minimal ? circuits : dependent).push_back(x);
    }
    return RankRDecomposition{m.bases(), SubsetFamily::from_sorted_unchecked(std::move(circuits)),
                              SubsetFamily::from_sorted_unchecked(std::move(dependent))};
}

bool is_paving(const Matroid& m) {
    if (m.rank() == 0) return true;
    SubsetFamily below = enumerate_rsubsets(m.ground(), m.rank() - 1);
    for (const RSubset& x : below.members())
        if (!m.independent(x)) return false;
    return true;
}

bool is_sparse_paving(const Matroid& m) {
    bool primary = is_paving(m) && is_paving(m.dual());
    if (m.n() >= 3 && m.rank() >= 2) {
        RankRDecomposition d = decompose_rank_r(m);
        bool alt = is_paving(m) && d.dependent_noncircuits.empty() &&
                   satisfies_star_star(d.circuits, m.rank()).holds;
        if (alt != primary)
            throw std::logic_error("sparse paving characterizations disagree");
    }
    return primary;
}

Matroid sparse_from_circuits(GroundSet g, int r, const SubsetFamily& circuits) {
    if (g.n < 3) throw std::domain_error("need at least 3 elements, got " + std::to_string(g.n));
    if (r < 2 || r > g.n - 1)
        throw std::domain_error("rank must satisfy 2 <= r <= n-1, got r = " + std::to_string(r));
    for (const RSubset& c : circuits.members())
        if (!c.subset_of(RSubset{g.full_mask()}))
            throw std::domain_error("circuit " + subset_str(c) + " leaves the ground set");

    StarStarReport rep = satisfies_star_star(circuits, r);
    if (!rep.holds) throw StarStarViolation(rep.witness->first, rep.witness->second);

    SubsetFamily all = enumerate_rsubsets(g, r);
    std::vector<RSubset> keep;
    keep.reserve(all.size() - circuits.size());
    for (const RSubset& x : all.members())
        if (!circuits.contains(x)) keep.push_back(x);
    return Matroid::from_bases(g, r, SubsetFamily::from_sorted_unchecked(std::move(keep)));
}

}  // namespace sparsepave
