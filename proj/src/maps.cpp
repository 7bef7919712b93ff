#include "sparsepave/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparsepave {

std::string Tag::to_string() const {
    switch (kind) {
        case Kind::circuit_part: return "c" + std::to_string(j);
        case Kind::dependent_part: return "d" + std::to_string(j);
        default: return std::to_string(j);
    }
}

namespace {

void require_sparse(const Matroid& m, const char* who) {
    if (!is_sparse_paving(m))
        throw std::domain_error(std::string(who) + " needs a sparse paving input");
}

// Bases = all rank-subsets minus the circuits, for any rank.  Ranks below 2
// fall outside the pairwise-intersection machinery: a rank-1 matroid is
// sparse paving exactly when it has at most one loop, and rank 0 admits no
// circuits of size 0.
Matroid build_sparse_any_rank(GroundSet g, int rank, const SubsetFamily& circuits) {
    if (rank >= 2 && g.n >= 3 && rank <= g.n - 1)
        return sparse_from_circuits(g, rank, circuits);
    if (rank == 1 && circuits.size() > 1)
        throw std::domain_error("more than one loop is not sparse paving");
    if (rank == 0 && !circuits.empty())
        throw std::domain_error("rank 0 admits no circuits");
    std::vector<RSubset> keep;
    SubsetFamily all = enumerate_rsubsets(g, rank);
    for (const RSubset& x : all.members())
        if (!circuits.contains(x)) keep.push_back(x);
    if (keep.empty())
        throw std::domain_error("no bases left after removing the circuits");
    return Matroid::from_bases(g, rank, SubsetFamily::from_sorted_unchecked(std::move(keep)));
}

SubsetFamily intersect_family(const SubsetFamily& a, const SubsetFamily& b) {
    std::vector<RSubset> out;
    const SubsetFamily& small = a.size() <= b.size() ? a : b;
    const SubsetFamily& large = a.size() <= b.size() ? b : a;
    for (const RSubset& x : small.members())
        if (large.contains(x)) out.push_back(x);
    return SubsetFamily::from_sorted_unchecked(std::move(out));
}

struct PartitionedInput {
    RankRDecomposition decomp;
    StarPartition partition;
};

PartitionedInput prepare(const Matroid& m, const std::optional<RSubset>& pivot, const char* who) {
    if (m.n() < 3 || m.rank() < 2 || m.rank() > m.n() - 1)
        throw std::domain_error(std::string(who) +
                                " needs n >= 3 and rank between 2 and n-1");
    // Default pivot {1, ..., r}; the rank is at most n-1 <= 63 here.
    RSubset piv = pivot.value_or(RSubset{(1ull << m.rank()) - 1});
    // Partition first: it validates the pivot cheaply before the
    // decomposition does any real work.
    StarPartition part = build_partition(m.ground(), m.rank(), piv);
    return PartitionedInput{decompose_rank_r(m), std::move(part)};
}

const SubsetFamily& class_at(const StarPartition& p, int j) {
    if (j <= p.alpha) return p.odd_classes[static_cast<std::size_t>(j - 1)];
    return p.even_classes[static_cast<std::size_t>(j - p.alpha - 1)];
}

}  // namespace

Matroid iota(const Matroid& m) {
    require_sparse(m, "iota");
    if (m.n() + 1 > 64) throw std::domain_error("cannot grow past 64 elements");
    GroundSet bigger(m.n() + 1);
    std::vector<RSubset> bases = m.bases().members();
    SubsetFamily grown = enumerate_rsubsets(bigger, m.rank());
    for (const RSubset& x : grown.members())
        if (x.contains(bigger.n)) bases.push_back(x);
    std::sort(bases.begin(), bases.end(), lex_less);
    return Matroid::from_bases(bigger, m.rank(), SubsetFamily::from_sorted_unchecked(std::move(bases)));
}

std::pair<Matroid, Matroid> zeta(const Matroid& m) {
    require_sparse(m, "zeta");
    const int r = m.rank();
    if (r < 2 || r > m.n() - 1)
        throw std::domain_error("zeta needs rank between 2 and n-1");
    const int dropped = m.n();
    GroundSet smaller(m.n() - 1);

    std::vector<RSubset> keep_rank, drop_rank;
    RankRDecomposition d = decompose_rank_r(m);
    for (const RSubset& c : d.circuits.members()) {
        if (c.contains(dropped))
            drop_rank.push_back(c.without(dropped));
        else
            keep_rank.push_back(c);
    }
    Matroid piece_r = build_sparse_any_rank(
        smaller, r, SubsetFamily::from_sorted_unchecked(std::move(keep_rank)));
    Matroid piece_r1 = build_sparse_any_rank(
        smaller, r - 1, SubsetFamily::from_sorted_unchecked(std::move(drop_rank)));
    return {std::move(piece_r), std::move(piece_r1)};
}

SubsetFamily zeta_reconstruct_circuits(const Matroid& rank_r_piece,
                                       const Matroid& dropped_rank_piece) {
    if (rank_r_piece.n() != dropped_rank_piece.n() ||
        rank_r_piece.rank() != dropped_rank_piece.rank() + 1)
        throw std::domain_error("pieces do not fit together");
    int restored = rank_r_piece.n() + 1;
    std::vector<RSubset> circuits;
    RankRDecomposition kept = decompose_rank_r(rank_r_piece);
    RankRDecomposition dropped = decompose_rank_r(dropped_rank_piece);
    for (const RSubset& c : kept.circuits.members()) circuits.push_back(c);
    for (const RSubset& z : dropped.circuits.members()) circuits.push_back(z.with(restored));
    std::sort(circuits.begin(), circuits.end(), lex_less);
    return SubsetFamily::from_sorted_unchecked(std::move(circuits));
}

TaggedImage psi(const Matroid& m, std::optional<RSubset> pivot) {
    PartitionedInput in = prepare(m, pivot, "psi");
    SubsetFamily dependent = in.decomp.circuits.unite(in.decomp.dependent_noncircuits);
    TaggedImage out;
    int gamma = in.partition.gamma();
    out.entries.reserve(static_cast<std::size_t>(gamma));
    for (int j = 1; j <= gamma; ++j) {
        SubsetFamily circ = intersect_family(dependent, class_at(in.partition, j));
        out.entries.push_back(TaggedEntry{
            sparse_from_circuits(m.ground(), m.rank(), circ), Tag{Tag::Kind::plain, j},
            std::nullopt});
    }
    return out;
}

TaggedImage psi_bar(const Matroid& m, std::optional<RSubset> pivot) {
    PartitionedInput in = prepare(m, pivot, "psi_bar");
    TaggedImage out;
    int gamma = in.partition.gamma();
    out.entries.reserve(static_cast<std::size_t>(2 * gamma));
    for (int j = 1; j <= gamma; ++j) {
        SubsetFamily circ = intersect_family(in.decomp.circuits, class_at(in.partition, j));
        out.entries.push_back(TaggedEntry{sparse_from_circuits(m.ground(), m.rank(), circ),
                                          Tag{Tag::Kind::circuit_part, j}, std::nullopt});
    }
    for (int j = 1; j <= gamma; ++j) {
        SubsetFamily dep =
            intersect_family(in.decomp.dependent_noncircuits, class_at(in.partition, j));
        out.entries.push_back(TaggedEntry{sparse_from_circuits(m.ground(), m.rank(), dep),
                                          Tag{Tag::Kind::dependent_part, j}, std::nullopt});
    }
    return out;
}

TaggedImage gamma_map(const Matroid& m, std::optional<RSubset> pivot) {
    PartitionedInput in = prepare(m, pivot, "gamma_map");
    TaggedImage out = psi(m, std::move(pivot));
    for (std::size_t j = 0; j < out.entries.size(); ++j) {
        const SubsetFamily& cls = class_at(in.partition, static_cast<int>(j) + 1);
        bool inside = true;
        RankRDecomposition dj = decompose_rank_r(out.entries[j].matroid);
        for (const RSubset& c : dj.circuits.members())
            if (!cls.contains(c)) {
                inside = false;
                break;
            }
        out.entries[j].certified = inside;
    }
    return out;
}

}  // namespace sparsepave
