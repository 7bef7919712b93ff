#include "sparsepave/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sparsepave {

ShMatrix build_matrix(GroundSet g, int r, RSubset pivot, int h) {
    if (r < 0 || r > g.n) throw std::domain_error("rank out of range");
    if (pivot.card() != r)
        throw std::domain_error("pivot must have cardinality " + std::to_string(r));
    if (!pivot.subset_of(RSubset{g.full_mask()}))
        throw std::domain_error("pivot leaves the ground set");
    if (h < 0 || h > r) throw std::domain_error("layer must satisfy 0 <= h <= r");

    ShMatrix m;
    m.r = r;
    m.h = h;
    m.pivot = pivot;
    m.rows = enumerate_rsubsets_within(g.full_mask() & ~pivot.bits, r - h).members();
    m.cols = enumerate_rsubsets_within(pivot.bits, h).members();
    return m;
}

SubsetFamily diagonal_class(const ShMatrix& m, int j) {
    int R = static_cast<int>(m.rows.size());
    int C = static_cast<int>(m.cols.size());
    int longer = std::max(R, C);
    if (j < 1 || j > std::max(longer, 1))
        throw std::domain_error("diagonal index " + std::to_string(j) + " out of range");
    if (m.empty()) return SubsetFamily{};

    std::vector<RSubset> out;
    int shorter = std::min(R, C);
    out.reserve(static_cast<std::size_t>(shorter));
    for (int t = 0; t < shorter; ++t) {
        int s = (j - 1 + t) % longer;
        out.push_back(R >= C ? m.entry(s, t) : m.entry(t, s));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return SubsetFamily::from_sorted_unchecked(std::move(out));
}

StarPartition build_partition(GroundSet g, int r, RSubset pivot) {
    if (r < 1 || r > g.n) throw std::domain_error("rank out of range");

    std::vector<ShMatrix> layers;
    layers.reserve(static_cast<std::size_t>(r) + 1);
    for (int h = 0; h <= r; ++h) layers.push_back(build_matrix(g, r, pivot, h));

    StarPartition p;
    p.pivot = pivot;
    for (const ShMatrix& m : layers) {
        int count = std::max(static_cast<int>(m.rows.size()), static_cast<int>(m.cols.size()));
        if (m.h % 2 == 1)
            p.alpha = std::max(p.alpha, count);
        else
            p.beta = std::max(p.beta, count);
    }

    p.odd_classes.assign(static_cast<std::size_t>(p.alpha), SubsetFamily{});
    p.even_classes.assign(static_cast<std::size_t>(p.beta), SubsetFamily{});
    for (const ShMatrix& m : layers) {
        if (m.empty()) continue;
        auto& group = (m.h % 2 == 1) ? p.odd_classes : p.even_classes;
        for (int j = 1; j <= m.diagonal_count(); ++j)
            group[static_cast<std::size_t>(j - 1)] =
                group[static_cast<std::size_t>(j - 1)].unite(diagonal_class(m, j));
    }
    return p;
}

long long gamma_count(int n, int r) {
    if (n < 1 || n > 64) throw std::domain_error("need 1 <= n <= 64");
    if (r < 1 || r > n) throw std::domain_error("rank out of range");
    long long alpha = 0, beta = 0;
    for (int h = 0; h <= r; ++h) {
        long long count = static_cast<long long>(
            std::max(binom64(n - r, r - h), binom64(r, h)));
        if (h % 2 == 1)
            alpha = std::max(alpha, count);
        else
            beta = std::max(beta, count);
    }
    return alpha + beta;
}

}  // namespace sparsepave
