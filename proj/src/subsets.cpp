#include "sparsepave/subsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sparsepave {

GroundSet::GroundSet(int n_) : n(n_) {
    if (n < 1 || n > 64)
        throw std::domain_error("ground set size must be between 1 and 64, got " +
                                std::to_string(n_));
}

RSubset RSubset::of(std::initializer_list<int> elems) {
    return from_elements(std::vector<int>(elems));
}

RSubset RSubset::from_elements(const std::vector<int>& elems) {
    RSubset s;
    for (int e : elems) {
        if (e < 1 || e > 64)
            throw std::domain_error("element out of range: " + std::to_string(e));
        if (s.contains(e))
            throw std::invalid_argument("repeated element: " + std::to_string(e));
        s.bits |= 1ull << (e - 1);
    }
    return s;
}

int RSubset::card() const { return std::popcount(bits); }

bool RSubset::contains(int e) const { return e >= 1 && e <= 64 && (bits >> (e - 1)) & 1; }

RSubset RSubset::with(int e) const { return RSubset{bits | (1ull << (e - 1))}; }

RSubset RSubset::without(int e) const { return RSubset{bits & ~(1ull << (e - 1))}; }

std::vector<int> RSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card()));
    std::uint64_t b = bits;
    while (b) {
        int p = std::countr_zero(b);
        out.push_back(p + 1);
        b &= b - 1;
    }
    return out;
}

bool lex_less(RSubset a, RSubset b) {
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    int p = std::countr_zero(diff);
    bool a_has = (a.bits >> p) & 1;
    if (a.card() == b.card()) return a_has;
    // Mixed cardinalities: the side owning the first differing (smallest)
    // element sorts first unless the other is a strict prefix of it.
    std::uint64_t low_mask = (1ull << p) - 1;
    std::uint64_t common_prefix = a.bits & low_mask;  // == b.bits & low_mask
    if (a_has) {
        // b could still be a proper prefix of a only if b has no element > p,
        // in which case b comes first.
        return (b.bits & ~common_prefix) != 0;
    }
    return (a.bits & ~common_prefix) == 0;
}

int intersection_size(RSubset a, RSubset b) { return std::popcount(a.bits & b.bits); }

SubsetFamily SubsetFamily::from_members(std::vector<RSubset> members) {
    if (!members.empty()) {
        int c = members.front().card();
        for (const RSubset& m : members)
            if (m.card() != c)
                throw std::invalid_argument("family members must share one cardinality");
    }
    std::sort(members.begin(), members.end(), lex_less);
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i] == members[i - 1])
            throw std::invalid_argument("duplicate family member");
    SubsetFamily f;
    f.members_ = std::move(members);
    return f;
}

SubsetFamily SubsetFamily::from_sorted_unchecked(std::vector<RSubset> members) {
    SubsetFamily f;
    f.members_ = std::move(members);
    return f;
}

bool SubsetFamily::contains(RSubset x) const { return index_of(x) >= 0; }

int SubsetFamily::index_of(RSubset x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x, lex_less);
    if (it != members_.end() && *it == x)
        return static_cast<int>(it - members_.begin());
    return -1;
}

int SubsetFamily::member_cardinality() const {
    return members_.empty() ? -1 : members_.front().card();
}

SubsetFamily SubsetFamily::unite(const SubsetFamily& other) const {
    std::vector<RSubset> merged;
    merged.reserve(members_.size() + other.members_.size());
    std::merge(members_.begin(), members_.end(), other.members_.begin(),
               other.members_.end(), std::back_inserter(merged), lex_less);
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return from_sorted_unchecked(std::move(merged));
}

namespace {

// Guards against accidentally materializing astronomically large families.
constexpr std::uint64_t kMaxFamilySize = 1ull << 22;

}  // namespace

SubsetFamily enumerate_rsubsets(GroundSet g, int r) {
    if (r < 0 || r > g.n)
        throw std::domain_error("subset size " + std::to_string(r) +
                                " out of range for n = " + std::to_string(g.n));
    return enumerate_rsubsets_within(g.full_mask(), r);
}

SubsetFamily enumerate_rsubsets_within(std::uint64_t universe, int k) {
    RSubset u{universe};
    std::vector<int> labels = u.elements();
    int m = static_cast<int>(labels.size());
    if (k < 0 || k > m) return SubsetFamily{};

    std::uint64_t total = binom64(m, k);
    if (total > kMaxFamilySize)
        throw std::domain_error("refusing to enumerate " + std::to_string(total) +
                                " subsets");

    std::vector<RSubset> out;
    out.reserve(static_cast<std::size_t>(total));
    if (k == 0) {
        out.push_back(RSubset{});
        return SubsetFamily::from_sorted_unchecked(std::move(out));
    }

    // Classic lexicographic combination walk over positions 0..m-1.
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        RSubset s;
        for (int i = 0; i < k; ++i)
            s.bits |= 1ull << (labels[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])] - 1);
        out.push_back(s);

        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return SubsetFamily::from_sorted_unchecked(std::move(out));
}

std::uint64_t binom64(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace sparsepave
